// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The hyperetf Authors
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

#include <optional>
#include <string>

#include "hyperetf/frame.hpp"
#include "hyperetf/verify.hpp"

namespace hyperetf::io {

inline constexpr const char* kFormatTag = "etf-frame/1";
/// Significant digits of CSV entries.
inline constexpr int kCsvDigits = 15;

/// Rationals as [num, den]; numbers outside 64 bits are written as decimal strings.
std::string certificate_json(const verify::EtfCertificate& c, int indent = 2);

/// Cyclotomic entries as reduced-basis coefficient arrays, float entries as [re, im].
std::string write_json(const FrameMatrix& f, const std::optional<verify::EtfCertificate>& cert = std::nullopt);
/// Throws Parse on any malformed or inconsistent input.
FrameMatrix read_json(const std::string& text);

/// One row per line of "a+bi" entries; a leading '#' line carries q, variant and span.
std::string write_csv(const FrameMatrix& f);
/// Float-mode frame; span from the header line when present, else full.
FrameMatrix read_csv(const std::string& text);

/// JSON when the first non-blank character is '{', CSV otherwise.
FrameMatrix read_frame(const std::string& text);

/// Throws Parse when the file cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace hyperetf::io
