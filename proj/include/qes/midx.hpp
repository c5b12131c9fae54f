// midx.hpp -- exponent multi-index over d variables.
//
// The ordering used everywhere (map keys, bases, serializations) is
// graded-lexicographic: lower total degree first; within a degree the
// index with the larger leading exponents comes first, so the degree-2
// monomials in two variables list as x^2, xy, y^2.

#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace qes {

class MIdx {
public:
    MIdx() = default;
    explicit MIdx(int d) : e_(static_cast<size_t>(d), 0) {}
    MIdx(std::initializer_list<int> l) : e_(l) {}
    explicit MIdx(std::vector<int> e) : e_(std::move(e)) {}

    // k times the i-th coordinate direction
    static MIdx axis(int d, int i, int k = 1) {
        MIdx m(d);
        m.e_[static_cast<size_t>(i)] = k;
        return m;
    }

    int dim() const { return static_cast<int>(e_.size()); }
    int deg() const {
        int s = 0;
        for (int v : e_) s += v;
        return s;
    }
    bool is_zero() const { return deg() == 0; }

    int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    int& operator[](int i) { return e_[static_cast<size_t>(i)]; }
    const std::vector<int>& exps() const { return e_; }

    // componentwise >=
    bool dominates(const MIdx& o) const {
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] < o.e_[i]) return false;
        return true;
    }

    MIdx operator+(const MIdx& o) const {
        MIdx r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }
    MIdx operator-(const MIdx& o) const {
        MIdx r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        return r;
    }

    bool operator==(const MIdx& o) const { return e_ == o.e_; }

    bool operator<(const MIdx& o) const {
        const int da = deg(), db = o.deg();
        if (da != db) return da < db;
        return e_ > o.e_;  // ties: larger exponent vector first
    }

    std::string str() const;

private:
    std::vector<int> e_;
};

// All multi-indices of total degree <= max_degree, graded-lex order.
std::vector<MIdx> monomials_up_to(int d, int max_degree);

}  // namespace qes
