// Copyright 2026 The Tapaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tapaudit/distributions/difference.h"

#include <cmath>

namespace tapaudit {

double DiffPdf(double u, NoiseScale scale) {
  const double b = scale.value();
  const double a = std::fabs(u);
  if (std::isinf(a)) return 0.0;
  return (a + b) * std::exp(-a / b) / (4.0 * b * b);
}

}  // namespace tapaudit
