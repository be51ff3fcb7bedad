// SPDX-License-Identifier: Apache-2.0
//
// masec - movable-antenna aided secure transmission
// Copyright (C) 2026 masec contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>

namespace masec {

// Error taxonomy shared by all modules. The command line tool maps
// ConfigError to exit code 2 and PackingInfeasible to exit code 3; any other
// uncaught error exits with code 1.

// Malformed or inconsistent experiment configuration: unreadable file, bad
// JSON, unknown key, wrong type, or out-of-range value.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A set of antenna positions violates the region bounds or the pairwise
// minimum-distance requirement, or a constrained search domain is empty.
class ConstraintViolation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Rejection sampling exhausted its attempt budget without placing the
// requested number of antennas inside the region.
class PackingInfeasible : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// An input that must be nonzero (typically a channel vector) is zero.
class DegenerateInput : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Artificial noise was requested for a single-antenna transmitter, whose
// channel has no nontrivial null space.
class NoNullSpace : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// The receive-SNR target needs more signal power than the total budget.
class InfeasibleDesign : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace masec
