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

#include "toybit/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace toybit {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
        if (p >= images_.size() || seen[p]) throw std::invalid_argument("not a bijection");
        seen[p] = true;
    }
}

Permutation Permutation::identity(std::size_t degree) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(std::size_t degree, std::string_view cycles) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    const bool comma_separated = cycles.find(',') != std::string_view::npos;
    std::vector<std::size_t> cycle;
    auto close_cycle = [&] {
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            img[cycle[k]] = static_cast<Point>(cycle[(k + 1) % cycle.size()]);
        }
        cycle.clear();
    };
    bool open = false;
    for (std::size_t pos = 0; pos < cycles.size();) {
        const char c = cycles[pos];
        if (c == '(') {
            if (open) throw std::invalid_argument("nested cycle");
            open = true;
            ++pos;
        } else if (c == ')') {
            if (!open) throw std::invalid_argument("unbalanced cycle");
            open = false;
            close_cycle();
            ++pos;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            if (!open) throw std::invalid_argument("point outside a cycle");
            std::size_t end = pos + 1;
            if (comma_separated) {
                while (end < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[end]))) ++end;
            }
            const auto point = std::stoul(std::string(cycles.substr(pos, end - pos)));
            if (point < 1 || point > degree) throw std::invalid_argument("point out of range");
            for (auto q : cycle) {
                if (q == point - 1) throw std::invalid_argument("repeated point in cycle");
            }
            cycle.push_back(point - 1);
            pos = end;
        } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + c + "'");
        }
    }
    if (open) throw std::invalid_argument("unterminated cycle");
    return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation &rhs) const {
    if (rhs.degree() != degree()) throw std::invalid_argument("degree mismatch");
    std::vector<Point> img(degree());
    for (std::size_t i = 0; i < degree(); ++i) img[i] = images_[rhs.images_[i]];
    Permutation out;
    out.images_ = std::move(img);
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<Point> img(degree());
    for (std::size_t i = 0; i < degree(); ++i) img[images_[i]] = static_cast<Point>(i);
    Permutation out;
    out.images_ = std::move(img);
    return out;
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < degree(); ++i) {
        if (images_[i] != i) return false;
    }
    return true;
}

std::string Permutation::key() const {
    std::string k;
    if (degree() <= 256) {
        k.reserve(degree());
        for (Point p : images_) k.push_back(static_cast<char>(p));
    } else {
        k.reserve(2 * degree());
        for (Point p : images_) {
            k.push_back(static_cast<char>(p & 0xFF));
            k.push_back(static_cast<char>(p >> 8));
        }
    }
    return k;
}

std::string Permutation::to_cycles() const {
    std::ostringstream out;
    const bool wide = degree() > 9;
    std::vector<bool> done(degree(), false);
    for (std::size_t start = 0; start < degree(); ++start) {
        if (done[start]) continue;
        out << '(';
        std::size_t p = start;
        bool first = true;
        do {
            if (!first && wide) out << ',';
            out << p + 1;
            done[p] = true;
            p = images_[p];
            first = false;
        } while (p != start);
        out << ')';
    }
    return out.str();
}

}  // namespace toybit
