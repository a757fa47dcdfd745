#include "llcert/prob.hpp"

#include <cmath>
#include <string>

namespace llcert {

namespace {

template <class Num>
void check_probability(const Num& x, int i) {
    if constexpr (!NumOps<Num>::is_exact) {
        if (!std::isfinite(x)) throw Error("p[" + std::to_string(i + 1) + "] is not finite");
    }
    if (x < Num(0) || x > Num(1))
        throw Error("p[" + std::to_string(i + 1) + "] must lie in [0, 1]");
}

template <class Num>
void check_weight(const Num& x, int i) {
    if constexpr (!NumOps<Num>::is_exact) {
        if (!std::isfinite(x)) throw Error("y[" + std::to_string(i + 1) + "] is not finite");
    }
    if (!(x > Num(0)))
        throw Error("y[" + std::to_string(i + 1) + "] must be positive");
}

} // namespace

template <class Num>
ProbVector<Num>::ProbVector(std::vector<Num> p) : p_(std::move(p)) {
    if (p_.empty()) throw Error("probability vector must not be empty");
    for (int i = 0; i < size(); ++i) check_probability(p_[i], i);
}

template <class Num>
WeightVector<Num>::WeightVector(std::vector<Num> y) : y_(std::move(y)) {
    if (y_.empty()) throw Error("weight vector must not be empty");
    for (int i = 0; i < size(); ++i) check_weight(y_[i], i);
}

void require_table_size(int n) {
    if (n > kTableCap)
        throw Error("coefficient tables are capped at n = " + std::to_string(kTableCap) +
                    " vertices (2^n entries); got n = " + std::to_string(n));
}

template class ProbVector<Rational>;
template class ProbVector<double>;
template class WeightVector<Rational>;
template class WeightVector<double>;

} // namespace llcert
