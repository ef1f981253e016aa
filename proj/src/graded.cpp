#include "logtoric/graded.hpp"

#include <algorithm>
#include <functional>

namespace logtoric {

namespace {

// Incremental exact row reduction: rows with distinct pivot columns, each
// reduced against the rows inserted before it.  eliminate() zeroes every
// pivot column of v; the result is a deterministic linear residual whose
// kernel is the span of the inserted rows.
class RowReducer {
  public:
    explicit RowReducer(std::size_t cols) : cols_(cols) {}

    void eliminate(std::vector<Rat>& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            Rat factor = v[pivots_[r]];
            if (factor == 0) {
                continue;
            }
            const std::vector<Rat>& row = rows_[r];
            for (std::size_t j = 0; j < cols_; ++j) {
                if (row[j] != 0) {
                    v[j] -= factor * row[j];
                }
            }
        }
    }

    // Returns true and keeps the row when it enlarges the span.
    bool insert(std::vector<Rat> v) {
        eliminate(v);
        std::size_t pivot = cols_;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (v[j] != 0) {
                pivot = j;
                break;
            }
        }
        if (pivot == cols_) {
            return false;
        }
        Rat lead = v[pivot];
        for (std::size_t j = 0; j < cols_; ++j) {
            if (v[j] != 0) {
                v[j] /= lead;
            }
        }
        pivots_.push_back(pivot);
        rows_.push_back(std::move(v));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

  private:
    std::size_t cols_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<std::size_t> pivots_;
};

// Union-find over interned exponents with a dead flag per class.
class ExponentClasses {
  public:
    std::size_t intern(const IntVec& e) {
        auto [it, inserted] = index_.emplace(e, parent_.size());
        if (inserted) {
            parent_.push_back(it->second);
            dead_.push_back(false);
        }
        return it->second;
    }

    std::size_t find(std::size_t i) {
        while (parent_[i] != i) {
            parent_[i] = parent_[parent_[i]];
            i = parent_[i];
        }
        return i;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return;
        }
        parent_[b] = a;
        dead_[a] = dead_[a] || dead_[b];
    }

    void kill(std::size_t i) { dead_[find(i)] = true; }
    bool is_dead(std::size_t i) { return dead_[find(i)]; }

    std::size_t lookup(const IntVec& e) const { return index_.at(e); }

  private:
    std::map<IntVec, std::size_t> index_;
    std::vector<std::size_t> parent_;
    std::vector<char> dead_;
};

bool is_class_ideal(const std::vector<LaurentPolynomial>& gens) {
    for (const LaurentPolynomial& g : gens) {
        if (g.term_count() == 1) {
            continue;
        }
        if (g.term_count() == 2) {
            Rat total(0);
            for (const auto& [e, c] : g.terms()) {
                total += c;
            }
            if (total == 0) {
                continue;
            }
        }
        return false;
    }
    return true;
}

void validate_generators(const AffineMonoid& monoid, const IntVec& weights,
                         const std::vector<LaurentPolynomial>& gens) {
    for (const LaurentPolynomial& g : gens) {
        if (g.is_zero()) {
            continue;
        }
        if (!g.homogeneous_degree(weights).has_value()) {
            throw MathError("ideal generator is not homogeneous");
        }
        for (const auto& [e, c] : g.terms()) {
            if (!monoid.contains(e)) {
                throw MathError("ideal generator has an exponent outside the chart");
            }
        }
    }
}

}  // namespace

std::vector<IntVec> window_monomials(const AffineMonoid& monoid, const IntVec& weights,
                                     const Int& degree, const Int& window) {
    if (weights.size() != monoid.ambient_dim()) {
        throw MathError("weight vector rank differs from the ambient dimension");
    }
    if (window < 0) {
        throw MathError("degree window must be nonnegative");
    }
    if (!window.fits_slong_p()) {
        throw MathError("degree window too large");
    }
    long w = window.get_si();
    std::size_t dim = monoid.ambient_dim();
    std::vector<IntVec> out;
    IntVec current(dim);
    std::function<void(std::size_t, long)> visit = [&](std::size_t i, long budget) {
        if (i == dim) {
            if (dot(weights, current) == degree && monoid.contains(current)) {
                out.push_back(current);
            }
            return;
        }
        for (long v = -budget; v <= budget; ++v) {
            current[i] = Int(v);
            visit(i + 1, budget - (v < 0 ? -v : v));
        }
        current[i] = Int(0);
    };
    visit(0, w);
    std::sort(out.begin(), out.end());
    return out;
}

QuotientPiece::QuotientPiece(AffineMonoid ring_monoid,
                             const std::vector<LaurentPolynomial>& ideal_gens, IntVec weights,
                             Int degree, Int window, bool force_row_reduction)
    : monoid_(std::move(ring_monoid)),
      weights_(std::move(weights)),
      degree_(std::move(degree)),
      window_(std::move(window)) {
    validate_generators(monoid_, weights_, ideal_gens);
    window_monomials_ = window_monomials(monoid_, weights_, degree_, window_);

    std::vector<LaurentPolynomial> gens;
    for (const LaurentPolynomial& g : ideal_gens) {
        if (!g.is_zero()) {
            gens.push_back(g);
        }
    }

    if (!force_row_reduction && is_class_ideal(gens)) {
        // Union-find path: a monomial product kills a class, a two-term
        // difference product merges the classes of its exponents.
        ExponentClasses classes;
        for (const IntVec& e : window_monomials_) {
            classes.intern(e);
        }
        for (const LaurentPolynomial& g : gens) {
            Int complement = degree_ - *g.homogeneous_degree(weights_);
            for (const IntVec& m : window_monomials(monoid_, weights_, complement, window_)) {
                if (g.term_count() == 1) {
                    classes.kill(classes.intern(g.terms().begin()->first + m));
                } else {
                    auto it = g.terms().begin();
                    std::size_t a = classes.intern(it->first + m);
                    ++it;
                    std::size_t b = classes.intern(it->first + m);
                    classes.unite(a, b);
                }
            }
        }
        std::map<std::size_t, std::size_t> coord_of_root;
        for (const IntVec& e : window_monomials_) {
            std::size_t root = classes.find(classes.lookup(e));
            if (classes.is_dead(root)) {
                continue;
            }
            if (coord_of_root.emplace(root, coord_of_root.size()).second) {
                basis_.push_back(e);
            }
        }
        embedding_dim_ = coord_of_root.size();
        for (const IntVec& e : window_monomials_) {
            std::vector<Rat> coords(embedding_dim_, Rat(0));
            std::size_t root = classes.find(classes.lookup(e));
            if (!classes.is_dead(root)) {
                coords[coord_of_root.at(root)] = 1;
            }
            coord_of_.emplace(e, std::move(coords));
        }
        return;
    }

    // General path: row-reduce the windowed ideal slice over the occurring
    // exponents and take elimination residuals as quotient coordinates.
    std::vector<LaurentPolynomial> slice;
    std::map<IntVec, std::size_t> expo_index;
    auto intern = [&expo_index](const IntVec& e) {
        expo_index.emplace(e, expo_index.size());
    };
    for (const IntVec& e : window_monomials_) {
        intern(e);
    }
    for (const LaurentPolynomial& g : gens) {
        Int complement = degree_ - *g.homogeneous_degree(weights_);
        for (const IntVec& m : window_monomials(monoid_, weights_, complement, window_)) {
            slice.push_back(g.shifted(m));
            for (const auto& [e, c] : slice.back().terms()) {
                intern(e);
            }
        }
    }
    embedding_dim_ = expo_index.size();
    RowReducer ideal_rows(embedding_dim_);
    for (const LaurentPolynomial& p : slice) {
        std::vector<Rat> row(embedding_dim_, Rat(0));
        for (const auto& [e, c] : p.terms()) {
            row[expo_index.at(e)] = c;
        }
        ideal_rows.insert(std::move(row));
    }
    RowReducer independent(embedding_dim_);
    for (const IntVec& e : window_monomials_) {
        std::vector<Rat> v(embedding_dim_, Rat(0));
        v[expo_index.at(e)] = 1;
        ideal_rows.eliminate(v);
        if (independent.insert(v)) {
            basis_.push_back(e);
        }
        coord_of_.emplace(e, std::move(v));
    }
}

std::vector<Rat> QuotientPiece::reduce(const LaurentPolynomial& p) const {
    if (p.rank() != monoid_.ambient_dim()) {
        throw MathError("polynomial exponent ranks differ");
    }
    std::vector<Rat> out(embedding_dim_, Rat(0));
    for (const auto& [e, c] : p.terms()) {
        if (dot(weights_, e) != degree_) {
            throw MathError("polynomial is not homogeneous of the expected degree");
        }
        if (!monoid_.contains(e)) {
            throw MathError("exponent outside the chart monoid");
        }
        if (e.l1_norm() > window_) {
            throw MathError("exponent outside the degree window");
        }
        auto it = coord_of_.find(e);
        if (it == coord_of_.end()) {
            throw MathError("internal error: windowed monomial missing from the piece");
        }
        const std::vector<Rat>& coords = it->second;
        for (std::size_t j = 0; j < embedding_dim_; ++j) {
            if (coords[j] != 0) {
                out[j] += c * coords[j];
            }
        }
    }
    return out;
}

bool QuotientPiece::is_ideal_member(const LaurentPolynomial& p) const {
    for (const Rat& c : reduce(p)) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

bool equal_in_quotient(const QuotientPiece& piece, const LaurentPolynomial& p,
                       const LaurentPolynomial& q) {
    return piece.is_ideal_member(p - q);
}

std::optional<unsigned> nilpotency_order_in(const AffineMonoid& ring_monoid,
                                            const std::vector<LaurentPolynomial>& ideal_gens,
                                            const IntVec& weights, const LaurentPolynomial& p,
                                            unsigned max_power, const Int& window) {
    if (p.is_zero()) {
        return 1;
    }
    std::optional<Int> deg = p.homogeneous_degree(weights);
    if (!deg) {
        throw MathError("polynomial is not homogeneous");
    }
    LaurentPolynomial power = LaurentPolynomial::monomial(IntVec(p.rank()));
    for (unsigned k = 1; k <= max_power; ++k) {
        power = power * p;
        bool within_window = true;
        for (const auto& [e, c] : power.terms()) {
            if (e.l1_norm() > window) {
                within_window = false;
                break;
            }
        }
        if (!within_window) {
            return std::nullopt;
        }
        QuotientPiece piece(ring_monoid, ideal_gens, weights, Int(k) * *deg, window);
        if (piece.is_ideal_member(power)) {
            return k;
        }
    }
    return std::nullopt;
}

BlowupConfig build_blowup_config(std::vector<std::string> var_names, IntVec weights,
                                 std::vector<LaurentPolynomial> ideal_gens,
                                 const Subdivision& fan) {
    std::size_t dim = fan.base().ambient_dim();
    if (var_names.size() != dim) {
        throw MathError("variable names and lattice rank differ");
    }
    if (weights.size() != dim) {
        throw MathError("weight vector rank differs from the ambient dimension");
    }
    AffineMonoid base_monoid = AffineMonoid::cone_points(fan.base().dual());
    validate_generators(base_monoid, weights, ideal_gens);
    std::vector<ChartMonoid> charts;
    for (const Cone& sigma : fan.maximal_cones()) {
        charts.push_back(chart_monoid_of_cone(sigma));
    }
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, ChartMonoid>> overlaps;
    for (std::size_t i = 0; i < charts.size(); ++i) {
        for (std::size_t j = i + 1; j < charts.size(); ++j) {
            Cone overlap = charts[i].tau.intersect(charts[j].tau);
            overlaps.emplace_back(std::make_pair(i, j), chart_monoid_of_cone(overlap));
        }
    }
    return BlowupConfig{std::move(var_names), std::move(weights), std::move(base_monoid),
                        std::move(ideal_gens), fan,           std::move(charts),
                        std::move(overlaps)};
}

SectionComputation::SectionComputation(const BlowupConfig& config, const Int& degree,
                                       const Int& window)
    : degree_(degree), gens_(config.ideal_gens) {
    base_piece_.emplace(config.base_monoid, gens_, config.weights, degree, window);
    for (const ChartMonoid& chart : config.charts) {
        chart_pieces_.emplace_back(chart.monoid, gens_, config.weights, degree, window);
    }
    for (const auto& [key, chart] : config.overlaps) {
        if (key.first >= chart_pieces_.size() || key.second >= chart_pieces_.size()) {
            throw MathError("overlap indices outside the chart list");
        }
        overlap_pieces_.emplace_back(
            key, QuotientPiece(chart.monoid, gens_, config.weights, degree, window));
    }

    // Restriction map: base quotient basis monomials to stacked chart
    // coordinates.
    std::vector<std::size_t> chart_offset(chart_pieces_.size() + 1, 0);
    for (std::size_t i = 0; i < chart_pieces_.size(); ++i) {
        chart_offset[i + 1] = chart_offset[i] + chart_pieces_[i].embedding_dim();
    }
    std::size_t stacked = chart_offset.back();
    phi_ = RatMat(stacked, base_piece_->dim());
    for (std::size_t k = 0; k < base_piece_->dim(); ++k) {
        LaurentPolynomial mono = LaurentPolynomial::monomial(base_piece_->basis()[k]);
        for (std::size_t i = 0; i < chart_pieces_.size(); ++i) {
            std::vector<Rat> coords = chart_pieces_[i].reduce(mono);
            for (std::size_t r = 0; r < coords.size(); ++r) {
                phi_.at(chart_offset[i] + r, k) = coords[r];
            }
        }
    }
    image_rank_ = rat_rank(phi_);
    for (const std::vector<Rat>& c : rat_nullspace(phi_)) {
        IntVec primitive = primitive_from_rational(c);
        LaurentPolynomial p(config.base_monoid.ambient_dim());
        for (std::size_t k = 0; k < base_piece_->dim(); ++k) {
            if (primitive[k] != 0) {
                p.add_term(base_piece_->basis()[k], Rat(primitive[k]));
            }
        }
        kernel_basis_.push_back(std::move(p));
    }

    // Glued section tuples: per-chart quotient basis coefficients subject to
    // agreement of the overlap reductions.
    std::vector<std::size_t> dim_offset(chart_pieces_.size() + 1, 0);
    for (std::size_t i = 0; i < chart_pieces_.size(); ++i) {
        dim_offset[i + 1] = dim_offset[i] + chart_pieces_[i].dim();
    }
    std::size_t total_dims = dim_offset.back();
    std::size_t constraint_rows = 0;
    for (const auto& [key, piece] : overlap_pieces_) {
        constraint_rows += piece.embedding_dim();
    }
    RatMat constraints(constraint_rows, total_dims);
    std::size_t row_base = 0;
    for (const auto& [key, piece] : overlap_pieces_) {
        auto [i, j] = key;
        for (std::size_t k = 0; k < chart_pieces_[i].dim(); ++k) {
            LaurentPolynomial mono = LaurentPolynomial::monomial(chart_pieces_[i].basis()[k]);
            std::vector<Rat> coords = piece.reduce(mono);
            for (std::size_t r = 0; r < coords.size(); ++r) {
                constraints.at(row_base + r, dim_offset[i] + k) = coords[r];
            }
        }
        for (std::size_t k = 0; k < chart_pieces_[j].dim(); ++k) {
            LaurentPolynomial mono = LaurentPolynomial::monomial(chart_pieces_[j].basis()[k]);
            std::vector<Rat> coords = piece.reduce(mono);
            for (std::size_t r = 0; r < coords.size(); ++r) {
                constraints.at(row_base + r, dim_offset[j] + k) -= coords[r];
            }
        }
        row_base += piece.embedding_dim();
    }
    gamma_dim_ = total_dims - rat_rank(constraints);
}

std::vector<Rat> SectionComputation::stack_sections(
    const std::vector<LaurentPolynomial>& sections) const {
    if (sections.size() != chart_pieces_.size()) {
        throw MathError("section tuple size differs from the number of charts");
    }
    std::vector<Rat> stacked;
    for (std::size_t i = 0; i < chart_pieces_.size(); ++i) {
        std::vector<Rat> coords = chart_pieces_[i].reduce(sections[i]);
        stacked.insert(stacked.end(), coords.begin(), coords.end());
    }
    return stacked;
}

bool SectionComputation::glue_test(const std::vector<LaurentPolynomial>& sections) const {
    stack_sections(sections);  // validates shape, degree, and supports
    for (const auto& [key, piece] : overlap_pieces_) {
        if (!piece.is_ideal_member(sections[key.first] - sections[key.second])) {
            return false;
        }
    }
    return true;
}

bool SectionComputation::preimage_exists(const std::vector<LaurentPolynomial>& sections) const {
    std::vector<Rat> target = stack_sections(sections);
    return rat_solve(phi_, target).has_value();
}

}  // namespace logtoric
