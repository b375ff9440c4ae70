// Copyright 2026 The toybit Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toybit::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when a claim is refuted and 2 on usage or input errors.
int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace toybit::cli
