#ifndef ACBM_TENSOR_HPP
#define ACBM_TENSOR_HPP

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "acbm/linalg.hpp"
#include "acbm/rational.hpp"

namespace acbm {

enum class Variance { Upper, Lower };

// Dense tensor over a single D-dimensional space, all slots running 0..D-1.
// Components are stored lexicographically by multi-index; the variance list
// records each slot's type so callers can assert what they are contracting.
class DenseTensor {
public:
    DenseTensor() = default;
    DenseTensor(std::size_t dim, std::vector<Variance> variance)
        : dim_(dim), variance_(std::move(variance)) {
        std::size_t size = 1;
        for (std::size_t s = 0; s < variance_.size(); ++s) size *= dim_;
        comps_.assign(size, Rational(0));
    }

    std::size_t dim() const { return dim_; }
    std::size_t order() const { return variance_.size(); }
    const std::vector<Variance>& variance() const { return variance_; }

    template <typename... I>
    Rational& operator()(I... idx) {
        return comps_[flat(idx...)];
    }
    template <typename... I>
    const Rational& operator()(I... idx) const {
        return comps_[flat(idx...)];
    }

    Rational& at(const std::vector<std::size_t>& idx) { return comps_[flat_vec(idx)]; }
    const Rational& at(const std::vector<std::size_t>& idx) const { return comps_[flat_vec(idx)]; }

    bool is_zero() const {
        for (const Rational& c : comps_)
            if (c != 0) return false;
        return true;
    }

    bool operator==(const DenseTensor&) const = default;

    DenseTensor& operator+=(const DenseTensor& o) {
        assert(o.dim_ == dim_ && o.variance_ == variance_);
        for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
        return *this;
    }
    DenseTensor& operator-=(const DenseTensor& o) {
        assert(o.dim_ == dim_ && o.variance_ == variance_);
        for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
        return *this;
    }
    DenseTensor& operator*=(const Rational& s) {
        for (Rational& c : comps_) c *= s;
        return *this;
    }

    friend DenseTensor operator+(DenseTensor a, const DenseTensor& b) { return a += b; }
    friend DenseTensor operator-(DenseTensor a, const DenseTensor& b) { return a -= b; }
    friend DenseTensor operator*(const Rational& s, DenseTensor t) { return t *= s; }

private:
    template <typename... I>
    std::size_t flat(I... idx) const {
        assert(sizeof...(idx) == order());
        std::size_t f = 0;
        ((f = f * dim_ + static_cast<std::size_t>(idx)), ...);
        return f;
    }
    std::size_t flat_vec(const std::vector<std::size_t>& idx) const {
        assert(idx.size() == order());
        std::size_t f = 0;
        for (std::size_t v : idx) f = f * dim_ + v;
        return f;
    }

    std::size_t dim_ = 0;
    std::vector<Variance> variance_;
    std::vector<Rational> comps_;
};

// Conversions between the order-2 tensor view and plain matrices.
DenseTensor tensor_from_matrix(const RatMatrix& m, Variance first, Variance second);
RatMatrix matrix_from_tensor(const DenseTensor& t);

}  // namespace acbm

#endif
