/*
 Copyright 2026 The Swarmsling Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

 https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
 */

#ifndef SWARMSLING_ERRORS_HPP
#define SWARMSLING_ERRORS_HPP

#include <stdexcept>

namespace swarmsling {

// Matrix passed to vee() is not skew-symmetric within tolerance.
struct NonSkewInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Matrix cannot be projected onto the rotation group (near-zero determinant).
struct DegenerateMatrix : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Commanded acceleration vector vanished; the thrust direction is undefined.
struct ZeroThrustDirection : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Desired heading is (anti-)parallel to the desired thrust axis.
struct DegenerateHeading : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rotor geometry yields a non-invertible thrust-to-wrench map.
struct SingularMixer : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Coupled payload mass matrix is numerically singular.
struct SingularMassMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A count (vehicles, links, inputs) is invalid or inconsistent.
struct BadCount : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Simulated state left the trust region (a component exceeded 1e6).
struct Diverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace swarmsling

#endif  // SWARMSLING_ERRORS_HPP
