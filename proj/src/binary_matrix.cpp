// Copyright 2026 The wirecut Authors
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

#include "wirecut/binary_matrix.hpp"

#include <utility>

#include "wirecut/errors.hpp"

namespace wirecut {

std::vector<std::uint8_t> BinaryMatrix::column(std::size_t c) const {
    std::vector<std::uint8_t> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void BinaryMatrix::set_column(std::size_t c, const std::vector<std::uint8_t>& v) {
    if (v.size() != rows_) throw InvalidInput("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) set(r, c, v[r] != 0);
}

void BinaryMatrix::swap_columns(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(bits_[r * cols_ + a], bits_[r * cols_ + b]);
}

void BinaryMatrix::add_column(std::size_t dst, std::size_t src) {
    for (std::size_t r = 0; r < rows_; ++r) bits_[r * cols_ + dst] ^= bits_[r * cols_ + src];
}

BinaryMatrix BinaryMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
    if (r0 + rows > rows_ || c0 + cols > cols_) throw InvalidInput("block out of range");
    BinaryMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) out.set(r, c, (*this)(r0 + r, c0 + c));
    return out;
}

bool BinaryMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
}

bool BinaryMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

bool BinaryMatrix::is_zero() const {
    for (auto b : bits_)
        if (b) return false;
    return true;
}

std::size_t BinaryMatrix::rank() const {
    BinaryMatrix m = *this;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && m(pivot, c) == 0) ++pivot;
        if (pivot == rows_) continue;
        for (std::size_t k = 0; k < cols_; ++k) std::swap(m.bits_[pivot * cols_ + k], m.bits_[rank * cols_ + k]);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r != rank && m(r, c)) {
                for (std::size_t k = 0; k < cols_; ++k) m.bits_[r * cols_ + k] ^= m.bits_[rank * cols_ + k];
            }
        }
        ++rank;
    }
    return rank;
}

std::string BinaryMatrix::str() const {
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.push_back((*this)(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

}  // namespace wirecut
