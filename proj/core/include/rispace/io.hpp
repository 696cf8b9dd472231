// Copyright 2026 The rispace authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rispace/gridfn.hpp"

namespace rispace {

/// GridFn file form: CSV with header `t,value`; `inf` allowed as a value.
/// The t column must form a log-uniform grid ending at 1.
GridFn read_gridfn_csv(const std::string& path);
GridFn read_gridfn_csv(std::istream& in, const std::string& name);

/// Plot-ready tables always carry u = log(2/t) next to t.
void write_gridfn_csv(std::ostream& out, const std::vector<std::string>& headers,
                      const std::vector<std::vector<double>>& columns);
void write_gridfn_csv(const std::string& path,
                      const std::vector<std::string>& headers,
                      const std::vector<std::vector<double>>& columns);

std::string format_double(double v);

}  // namespace rispace
