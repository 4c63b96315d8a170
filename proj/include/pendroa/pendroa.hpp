/*
 Copyright 2026 The pendroa Authors

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

#ifndef PENDROA_PENDROA_HPP
#define PENDROA_PENDROA_HPP

#include "pendroa/config.hpp"
#include "pendroa/csv.hpp"
#include "pendroa/integrate.hpp"
#include "pendroa/lqr.hpp"
#include "pendroa/model.hpp"
#include "pendroa/montecarlo.hpp"
#include "pendroa/random.hpp"
#include "pendroa/roa_analytic.hpp"
#include "pendroa/roa_lyapunov.hpp"
#include "pendroa/swingup.hpp"

namespace pendroa {

inline constexpr const char* kVersion = "0.1.0";

} // namespace pendroa

#endif // PENDROA_PENDROA_HPP
