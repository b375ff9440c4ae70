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

// Recomputes the pinned golden values and writes them as JSON.
//   derive_golden <out.json>    write the file
//   derive_golden --check       compare against the copy embedded at build time

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "toybit/golden.hpp"

namespace {

// Like dump(2), but arrays of scalars stay on one line.
void write_json(std::ostream &os, const toybit::Json &j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    if (j.is_object()) {
        os << "{\n";
        std::size_t i = 0;
        for (const auto &[k, v] : j.items()) {
            os << pad << toybit::Json(k).dump() << ": ";
            write_json(os, v, indent + 2);
            os << (++i < j.size() ? ",\n" : "\n");
        }
        os << std::string(static_cast<std::size_t>(indent), ' ') << "}";
    } else if (j.is_array() && !j.empty() && (j.front().is_array() || j.front().is_object())) {
        os << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            os << pad;
            write_json(os, j[i], indent + 2);
            os << (i + 1 < j.size() ? ",\n" : "\n");
        }
        os << std::string(static_cast<std::size_t>(indent), ' ') << "]";
    } else {
        os << j.dump();
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Recompute golden data"};
    std::string out_path;
    bool check = false;
    app.add_option("out", out_path, "Output file");
    app.add_flag("--check", check, "Compare with the embedded copy instead of writing");
    CLI11_PARSE(app, argc, argv);

    const auto derived = toybit::derive_golden_data();
    if (check) {
        if (derived == toybit::golden()) {
            std::cout << "golden data matches\n";
            return 0;
        }
        std::cerr << "golden data differs from the embedded copy\n";
        return 1;
    }
    const auto j = toybit::golden_to_json(derived);
    if (out_path.empty()) {
        write_json(std::cout, j, 0);
        std::cout << "\n";
        return 0;
    }
    std::ofstream file(out_path);
    write_json(file, j, 0);
    file << "\n";
    return file ? 0 : 1;
}
