#include "llcert/symmetric.hpp"

#include <cmath>
#include <numbers>

namespace llcert {

namespace {

void require_degree(int d, const char* what) {
    if (d < 2)
        throw Error(std::string(what) + " needs maximum degree >= 2, got " + std::to_string(d));
}

Rational int_pow(long base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
    return Rational(r);
}

} // namespace

ThresholdSet symmetric_thresholds(int d) {
    require_degree(d, "symmetric thresholds");
    ThresholdSet t;
    t.d = d;
    t.erdos_lovasz = Rational(1, 4L * d);
    t.spencer = int_pow(d, static_cast<unsigned long>(d)) /
                int_pow(d + 1, static_cast<unsigned long>(d) + 1);
    t.shearer = int_pow(d - 1, static_cast<unsigned long>(d) - 1) /
                int_pow(d, static_cast<unsigned long>(d));
    t.cluster_ed = 1.0 / (std::numbers::e * d);
    return t;
}

bool check_symm_inequality(long long d) {
    if (d < 2) throw Error("the inequality is stated for d >= 2, got " + std::to_string(d));
    // (d/(d-1))^(d-1) through exp/log to stay stable for huge d.
    const double power = std::exp(static_cast<double>(d - 1) *
                                  std::log1p(1.0 / static_cast<double>(d - 1)));
    return std::numbers::e >= 1.0 / static_cast<double>(d) + power;
}

template <class Num>
ClusterReport<Num> symmetric_certificate(const Graph& g, const Num& p_val, double epsilon) {
    const int d = g.max_degree();
    require_degree(d, "symmetric certificate");
    const int n = g.vertex_count();
    ProbVector<Num> p(std::vector<Num>(static_cast<std::size_t>(n), p_val));
    const Num y = NumOps<Num>::from(Rational(1, d - 1));
    WeightVector<Num> w(std::vector<Num>(static_cast<std::size_t>(n), y));
    return check_cluster(g, p, w, epsilon);
}

template ClusterReport<Rational> symmetric_certificate(const Graph&, const Rational&, double);
template ClusterReport<double> symmetric_certificate(const Graph&, const double&, double);

} // namespace llcert
