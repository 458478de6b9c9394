// Copyright 2026 LSSC Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LSSC_CONVERSION_H
#define LSSC_CONVERSION_H

#include <stdexcept>

#include "lssc/gf2.h"

namespace lssc {

struct not_a_generating_set_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invertible U with p_local == U * p_tilde over GF(2).
///
/// Rows of U are the minimum-weight representations of each local check as a
/// product of the measured checks; ties and rows solely needed for
/// invertibility are resolved deterministically. Throws
/// not_a_generating_set_error if the row spans differ or no invertible U can
/// be completed.
BinaryMatrix conversion_matrix(const BinaryMatrix &p_local, const BinaryMatrix &p_tilde);

}  // namespace lssc

#endif
