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

#ifndef TAPAUDIT_DISTRIBUTIONS_DIFFERENCE_H_
#define TAPAUDIT_DISTRIBUTIONS_DIFFERENCE_H_

#include "tapaudit/distributions/laplace.h"

namespace tapaudit {

// Density of L1 - L2 for independent L1, L2 ~ Lap(0, b):
//   (|u| + b) exp(-|u|/b) / (4 b^2).
// This is what the difference of two independently perturbed copies of the
// same raw count follows.
double DiffPdf(double u, NoiseScale scale);

}  // namespace tapaudit

#endif  // TAPAUDIT_DISTRIBUTIONS_DIFFERENCE_H_
