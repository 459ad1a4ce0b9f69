// SPDX-License-Identifier: Apache-2.0
//
// cbandcoex - interference and coordination-distance engine for 5G / C-band FSS
// Copyright (C) 2026 The cbandcoex Authors
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
#include <string>

namespace cbandcoex {

// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configuration value violates a documented invariant (negative attenuation,
// unknown key, malformed file).
class ValidationError : public Error {
public:
    using Error::Error;
};

// A formula was evaluated outside its domain, e.g. log10(0) in a path loss.
class DomainError : public Error {
public:
    using Error::Error;
};

// The scenario has no finite coordination distance.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

} // namespace cbandcoex
