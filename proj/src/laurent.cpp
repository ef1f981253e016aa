#include "logtoric/laurent.hpp"

#include <sstream>


namespace logtoric {

namespace {

void require_same_rank(std::size_t a, std::size_t b) {
    if (a != b) {
        throw MathError("polynomial exponent ranks differ");
    }
}

}  // namespace

LaurentPolynomial LaurentPolynomial::monomial(const IntVec& expo, const Rat& coeff) {
    LaurentPolynomial p(expo.size());
    p.add_term(expo, coeff);
    return p;
}

Rat LaurentPolynomial::coefficient(const IntVec& expo) const {
    auto it = terms_.find(expo);
    return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPolynomial::add_term(const IntVec& expo, const Rat& coeff) {
    if (expo.size() != rank_) {
        throw MathError("polynomial exponent ranks differ");
    }
    if (coeff == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(expo, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& other) const {
    require_same_rank(rank_, other.rank_);
    LaurentPolynomial out = *this;
    for (const auto& [expo, coeff] : other.terms_) {
        out.add_term(expo, coeff);
    }
    return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& other) const {
    require_same_rank(rank_, other.rank_);
    LaurentPolynomial out = *this;
    for (const auto& [expo, coeff] : other.terms_) {
        out.add_term(expo, -coeff);
    }
    return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial out(rank_);
    for (const auto& [expo, coeff] : terms_) {
        out.terms_.emplace(expo, -coeff);
    }
    return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& other) const {
    require_same_rank(rank_, other.rank_);
    LaurentPolynomial out(rank_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            out.add_term(ea + eb, ca * cb);
        }
    }
    return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const Rat& scalar) const {
    LaurentPolynomial out(rank_);
    if (scalar == 0) {
        return out;
    }
    for (const auto& [expo, coeff] : terms_) {
        out.terms_.emplace(expo, coeff * scalar);
    }
    return out;
}

LaurentPolynomial LaurentPolynomial::shifted(const IntVec& expo) const {
    if (expo.size() != rank_) {
        throw MathError("polynomial exponent ranks differ");
    }
    LaurentPolynomial out(rank_);
    for (const auto& [e, coeff] : terms_) {
        out.terms_.emplace(e + expo, coeff);
    }
    return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned exponent) const {
    LaurentPolynomial out = monomial(IntVec(rank_));
    for (unsigned i = 0; i < exponent; ++i) {
        out = out * *this;
    }
    return out;
}

std::optional<Int> LaurentPolynomial::homogeneous_degree(const IntVec& weights) const {
    if (weights.size() != rank_) {
        throw MathError("weight vector rank differs from polynomial rank");
    }
    std::optional<Int> degree;
    for (const auto& [expo, coeff] : terms_) {
        Int d = dot(weights, expo);
        if (!degree) {
            degree = d;
        } else if (*degree != d) {
            return std::nullopt;
        }
    }
    return degree;
}

bool LaurentPolynomial::is_homogeneous_of(const IntVec& weights, const Int& degree) const {
    if (weights.size() != rank_) {
        throw MathError("weight vector rank differs from polynomial rank");
    }
    for (const auto& [expo, coeff] : terms_) {
        if (dot(weights, expo) != degree) {
            return false;
        }
    }
    return true;
}

std::string LaurentPolynomial::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [expo, coeff] : terms_) {
        Rat magnitude = coeff;
        if (first) {
            if (coeff < 0) {
                out << "-";
                magnitude = -coeff;
            }
        } else {
            out << (coeff < 0 ? " - " : " + ");
            magnitude = coeff < 0 ? Rat(-coeff) : coeff;
        }
        bool constant_term = true;
        for (std::size_t i = 0; i < expo.size(); ++i) {
            if (expo[i] != 0) {
                constant_term = false;
                break;
            }
        }
        if (constant_term) {
            out << magnitude.get_str();
        } else {
            if (magnitude != 1) {
                out << magnitude.get_str() << "*";
            }
            out << "x^(";
            for (std::size_t i = 0; i < expo.size(); ++i) {
                if (i > 0) {
                    out << ",";
                }
                out << expo[i].get_str();
            }
            out << ")";
        }
        first = false;
    }
    return out.str();
}

LaurentPolynomial substitute_monomial_map(const LaurentPolynomial& p,
                                          const std::vector<IntVec>& images) {
    if (images.size() != p.rank()) {
        throw MathError("substitution image count differs from polynomial rank");
    }
    std::size_t target_rank = images.empty() ? 0 : images.front().size();
    for (const IntVec& image : images) {
        if (image.size() != target_rank) {
            throw MathError("substitution images have mixed ranks");
        }
    }
    LaurentPolynomial out(target_rank);
    for (const auto& [expo, coeff] : p.terms()) {
        IntVec target(target_rank);
        for (std::size_t i = 0; i < expo.size(); ++i) {
            for (std::size_t j = 0; j < target_rank; ++j) {
                target[j] += expo[i] * images[i][j];
            }
        }
        out.add_term(target, coeff);
    }
    return out;
}

}  // namespace logtoric
