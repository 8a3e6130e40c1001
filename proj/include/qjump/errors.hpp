// Copyright 2026 The qjump-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qjump {

/// Bad configuration or argument values; maps to CLI exit code 1.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// The integrator left its trust region (trace guard tripped); exit code 2.
class DivergenceError : public std::runtime_error {
  public:
    DivergenceError(const std::string& what, long step, double time)
        : std::runtime_error(what), step(step), time(time) {}
    long step = -1;
    double time = 0.0;
};

/// Filesystem failures, annotated with the offending path; exit code 3.
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qjump
