#include "areaenum/qword.hpp"

#include <stdexcept>

namespace areaenum {

QPolynomial QPolynomial::monomial(GaussianInt coeff, int a, int b, long c) {
    QPolynomial p;
    p.add_term({a, b, c}, coeff);
    return p;
}

GaussianInt QPolynomial::coeff(int a, int b, long c) const {
    auto it = terms_.find({a, b, c});
    return it == terms_.end() ? GaussianInt{} : it->second;
}

void QPolynomial::add_term(const QExponents& key, const GaussianInt& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
    for (const auto& [key, coeff] : other.terms_) add_term(key, coeff);
    return *this;
}

QPolynomial operator*(const QPolynomial& x, const QPolynomial& y) {
    QPolynomial r;
    for (const auto& [kx, cx] : x.terms_) {
        for (const auto& [ky, cy] : y.terms_) {
            // (u^a1 v^b1 Q^c1)(u^a2 v^b2 Q^c2): commuting v^b1 past u^a2
            // picks up Q^(a2 b1).
            QExponents key{kx.a + ky.a, kx.b + ky.b,
                           kx.c + ky.c + static_cast<long>(ky.a) * kx.b};
            r.add_term(key, cx * cy);
        }
    }
    return r;
}

std::map<long, GaussianInt> QPolynomial::identity_component() const {
    std::map<long, GaussianInt> result;
    for (const auto& [key, coeff] : terms_)
        if (key.a == 0 && key.b == 0) result.emplace(key.c, coeff);
    return result;
}

QPolynomial expand_power(const std::vector<QPolynomial>& generators, int n) {
    if (n < 0) throw std::invalid_argument("expand_power: n must be >= 0");
    QPolynomial sum;
    for (const auto& g : generators) sum += g;
    QPolynomial result = QPolynomial::monomial(1, 0, 0, 0);
    for (int i = 0; i < n; ++i) result = result * sum;
    return result;
}

}  // namespace areaenum
