#pragma once

#include <cstdint>
#include <vector>

#include "softdsep/errors.hpp"

namespace softdsep {

// Dense row-major matrix. Just enough container for square adjacency /
// weight / gradient matrices; no linear algebra here.
template <typename T>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols, T fill = T{}) : rows_(rows), cols_(cols), v_(static_cast<size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0) throw internal_error("Mat: negative shape");
    }

    static Mat square(int n, T fill = T{}) { return Mat(n, n, fill); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    size_t size() const { return v_.size(); }

    T& operator()(int r, int c) { return v_[static_cast<size_t>(r) * cols_ + c]; }
    const T& operator()(int r, int c) const { return v_[static_cast<size_t>(r) * cols_ + c]; }

    T* data() { return v_.data(); }
    const T* data() const { return v_.data(); }
    std::vector<T>& vec() { return v_; }
    const std::vector<T>& vec() const { return v_; }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && v_ == o.v_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> v_;
};

using Matrix = Mat<double>;
using BoolMat = Mat<uint8_t>;

inline double dot(const Matrix& a, const Matrix& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a.data()[i] * b.data()[i];
    return s;
}

inline void axpy(Matrix& y, double c, const Matrix& x) {
    for (size_t i = 0; i < y.size(); ++i) y.data()[i] += c * x.data()[i];
}

}  // namespace softdsep
