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

#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace kummerlab {

/// A set of exponents modulo the degree p, stored as a bitmask (p <= 31).
class Label {
public:
    Label() = default;
    explicit Label(std::uint32_t degree) : degree_(degree) {}
    Label(std::uint32_t degree, std::initializer_list<std::int64_t> exponents);

    std::uint32_t degree() const noexcept { return degree_; }
    std::uint32_t mask() const noexcept { return mask_; }

    void insert(std::int64_t exponent);
    bool contains(std::int64_t exponent) const noexcept;
    std::uint32_t size() const noexcept;
    bool empty() const noexcept { return mask_ == 0; }

    /// Ascending residues in [0, p).
    std::vector<std::uint32_t> elements() const;
    /// Smallest member; the label must be nonempty.
    std::uint32_t front() const;

    /// {-e : e in *this}
    Label negated() const { return scaled(-1); }
    /// {t*e : e in *this}
    Label scaled(std::int64_t t) const;
    bool subset_of(const Label& other) const noexcept { return (mask_ & ~other.mask_) == 0; }

    /// "{0,2,3}"
    std::string to_string() const;

    friend bool operator==(const Label&, const Label&) = default;

private:
    std::uint32_t degree_ = 0;
    std::uint32_t mask_ = 0;
};

/// Reduces e into [0, p).
inline std::uint32_t reduce_exponent(std::int64_t e, std::uint32_t p) noexcept {
    std::int64_t r = e % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

}  // namespace kummerlab
