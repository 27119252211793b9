// Copyright 2026 The ranforensics Authors
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

#ifndef RANFORENSICS_ERROR_HPP_
#define RANFORENSICS_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ranforensics {

// Every hard failure surfaces as an Error carrying the name of the module
// that raised it, so the CLI can emit a single machine-parseable line.
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& message);

  const std::string& module() const noexcept { return module_; }
  // Message without the module prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string module_;
  std::string detail_;
};

class IngestError : public Error {
 public:
  explicit IngestError(const std::string& message) : Error("ingest", message) {}
};

// A flow report that is valid JSON but carries neither an end-of-test
// summary nor intervals.
class FlowNoDataError : public IngestError {
 public:
  explicit FlowNoDataError(const std::string& message) : IngestError(message) {}
};

class KpiError : public Error {
 public:
  explicit KpiError(const std::string& message) : Error("kpi", message) {}
};

class FitError : public Error {
 public:
  explicit FitError(const std::string& message) : Error("fit", message) {}
};

class DiagnoseError : public Error {
 public:
  explicit DiagnoseError(const std::string& message) : Error("diagnose", message) {}
};

class AdvisorError : public Error {
 public:
  explicit AdvisorError(const std::string& message) : Error("advisor", message) {}
};

class SynthError : public Error {
 public:
  explicit SynthError(const std::string& message) : Error("synth", message) {}
};

class ReportError : public Error {
 public:
  explicit ReportError(const std::string& message) : Error("report", message) {}
};

}  // namespace ranforensics

#endif  // RANFORENSICS_ERROR_HPP_
