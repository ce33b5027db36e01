// SPDX-License-Identifier: Apache-2.0
//
// nula: non-uniform linear antenna array design and analysis for mmWave LoS MIMO
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

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace nula {

// Minimal dense row-major matrix. The design envelope is small (M <= ~128),
// so there is no blocking, no views, no expression templates.
template <class T>
class Mat {
  public:
    Mat() = default;

    Mat(std::size_t rows, std::size_t cols, T value = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, value) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<T> &data() const { return data_; }
    std::vector<T> &data() { return data_; }

    double frobenius_norm() const {
        double s = 0.0;
        for (const T &v : data_)
            s += std::norm(std::complex<double>(v));
        return std::sqrt(s);
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using RMat = Mat<double>;
using CMat = Mat<std::complex<double>>;

template <class T>
Mat<T> operator*(const Mat<T> &a, const Mat<T> &b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product: inner dimensions do not match");
    Mat<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

inline CMat adjoint(const CMat &a) {
    CMat h(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            h(j, i) = std::conj(a(i, j));
    return h;
}

inline RMat transpose(const RMat &a) {
    RMat t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            t(j, i) = a(i, j);
    return t;
}


inline CMat to_complex(const RMat &a) {
    CMat c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = {a(i, j), 0.0};
    return c;
}

} // namespace nula
