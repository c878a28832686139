// Copyright 2026 The kummerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kummerlab/label.hpp"

#include <bit>

#include "kummerlab/error.hpp"

namespace kummerlab {

Label::Label(std::uint32_t degree, std::initializer_list<std::int64_t> exponents) : degree_(degree) {
    for (auto e : exponents) insert(e);
}

void Label::insert(std::int64_t exponent) {
    mask_ |= std::uint32_t{1} << reduce_exponent(exponent, degree_);
}

bool Label::contains(std::int64_t exponent) const noexcept {
    return (mask_ >> reduce_exponent(exponent, degree_)) & 1U;
}

std::uint32_t Label::size() const noexcept { return static_cast<std::uint32_t>(std::popcount(mask_)); }

std::vector<std::uint32_t> Label::elements() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < degree_; ++i) {
        if ((mask_ >> i) & 1U) out.push_back(i);
    }
    return out;
}

std::uint32_t Label::front() const {
    if (mask_ == 0) throw Error(ErrorKind::HypothesisFailed, "empty label has no smallest member");
    return static_cast<std::uint32_t>(std::countr_zero(mask_));
}

Label Label::scaled(std::int64_t t) const {
    Label out(degree_);
    for (auto e : elements()) out.insert(static_cast<std::int64_t>(e) * t);
    return out;
}

std::string Label::to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto e : elements()) {
        if (!first) s += ',';
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

}  // namespace kummerlab
