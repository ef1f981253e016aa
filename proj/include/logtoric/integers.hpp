#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace logtoric {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when a mathematical precondition is violated (CLI exit code 2).
struct MathError : std::runtime_error {
    explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown on malformed input: polynomials, scenario files, config (exit code 1).
// For text with a meaningful position, offset() is the 0-based character
// index the error refers to (npos when not applicable).
struct ParseError : std::runtime_error {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_ = npos;
};

// Dense integer vector. Rank is the length.
class IntVec {
  public:
    IntVec() = default;
    explicit IntVec(std::size_t n) : e_(n, Int(0)) {}
    IntVec(std::initializer_list<long> xs) {
        e_.reserve(xs.size());
        for (long x : xs) e_.emplace_back(x);
    }
    explicit IntVec(std::vector<Int> xs) : e_(std::move(xs)) {}

    std::size_t size() const { return e_.size(); }
    Int& operator[](std::size_t i) { return e_[i]; }
    const Int& operator[](std::size_t i) const { return e_[i]; }

    bool is_zero() const {
        for (const Int& x : e_)
            if (x != 0) return false;
        return true;
    }

    friend IntVec operator+(const IntVec& a, const IntVec& b) {
        check_same_rank(a, b);
        IntVec r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
        return r;
    }
    friend IntVec operator-(const IntVec& a, const IntVec& b) {
        check_same_rank(a, b);
        IntVec r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
        return r;
    }
    friend IntVec operator-(const IntVec& a) {
        IntVec r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
        return r;
    }
    friend IntVec operator*(const Int& c, const IntVec& a) {
        IntVec r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
        return r;
    }

    friend Int dot(const IntVec& a, const IntVec& b) {
        check_same_rank(a, b);
        Int s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    }

    Int l1_norm() const {
        Int s = 0;
        for (const Int& x : e_) s += abs(x);
        return s;
    }

    friend bool operator==(const IntVec& a, const IntVec& b) { return a.e_ == b.e_; }
    friend bool operator!=(const IntVec& a, const IntVec& b) { return !(a == b); }
    // Lexicographic; total order used for all canonical sorting.
    friend bool operator<(const IntVec& a, const IntVec& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            int c = cmp(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (i) s += ", ";
            s += e_[i].get_str();
        }
        return s + ")";
    }

  private:
    static void check_same_rank(const IntVec& a, const IntVec& b) {
        if (a.size() != b.size()) throw MathError("vector rank mismatch");
    }
    std::vector<Int> e_;
};

// Dense row-major integer matrix.
class IntMat {
  public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}
    IntMat(std::initializer_list<std::initializer_list<long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        e_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw MathError("ragged matrix literal");
            for (long x : r) e_.emplace_back(x);
        }
    }

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    // Columns are the given vectors.
    static IntMat from_columns(const std::vector<IntVec>& cols, std::size_t rank_hint = 0) {
        std::size_t r = cols.empty() ? rank_hint : cols[0].size();
        IntMat m(r, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != r) throw MathError("column rank mismatch");
            for (std::size_t i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }
    static IntMat from_rows(const std::vector<IntVec>& rows, std::size_t rank_hint = 0) {
        std::size_t c = rows.empty() ? rank_hint : rows[0].size();
        IntMat m(rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw MathError("row rank mismatch");
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntVec column(std::size_t j) const {
        IntVec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }
    IntVec row(std::size_t i) const {
        IntVec v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
        return v;
    }
    std::vector<IntVec> columns() const {
        std::vector<IntVec> cs;
        cs.reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j) cs.push_back(column(j));
        return cs;
    }

    IntMat transposed() const {
        IntMat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend IntMat operator*(const IntMat& a, const IntMat& b) {
        if (a.cols_ != b.rows_) throw MathError("matrix shape mismatch in product");
        IntMat r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }
    friend IntVec operator*(const IntMat& a, const IntVec& x) {
        if (a.cols_ != x.size()) throw MathError("matrix/vector shape mismatch");
        IntVec r(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a.at(i, j) * x[j];
        return r;
    }
    friend bool operator==(const IntMat& a, const IntMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) s += "; ";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += " ";
                s += at(i, j).get_str();
            }
        }
        return s + "]";
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}
inline Int lcm_int(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int content(const IntVec& v) {
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) g = gcd_int(g, v[i]);
    return g;
}

}  // namespace logtoric
