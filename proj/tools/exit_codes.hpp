// Copyright 2026 The syklab Authors
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

// Process exit codes of the syklab tool, keyed on the exception that ended a
// command.

#include <exception>
#include <string>

#include "syklab/errors.hpp"

namespace syklab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitCapacity = 3;
inline constexpr int kExitNumerical = 4;

struct ExitStatus {
  int code = kExitOk;
  std::string message;
};

/// Must be called with a non-null exception pointer.
inline ExitStatus exit_status_for(std::exception_ptr error) {
  try {
    std::rethrow_exception(error);
  } catch (const CapacityError& e) {
    return {kExitCapacity, std::string("capacity error: ") + e.what()};
  } catch (const ConfigError& e) {
    return {kExitConfig, std::string("config error: ") + e.what()};
  } catch (const ParameterError& e) {
    return {kExitConfig, std::string("config error: ") + e.what()};
  } catch (const InputError& e) {
    return {kExitConfig, std::string("input error: ") + e.what()};
  } catch (const ArchiveError& e) {
    return {kExitConfig, std::string("archive error: ") + e.what()};
  } catch (const Error& e) {
    return {kExitNumerical, std::string("numerical error: ") + e.what()};
  } catch (const std::exception& e) {
    return {kExitNumerical, std::string("error: ") + e.what()};
  } catch (...) {
    return {kExitNumerical, "unknown error"};
  }
}

}  // namespace syklab::cli
