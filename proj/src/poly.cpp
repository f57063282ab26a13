#include "liftvf/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace liftvf {

int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

int weighted_degree(const Monomial& m, const VarTable& table) {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * table.weight(i);
    return d;
}

Poly Poly::zero(VarTablePtr table) { return Poly(std::move(table)); }

Poly Poly::constant(VarTablePtr table, Rational c) {
    Poly p(std::move(table));
    if (c != 0) p.terms_.emplace(Monomial(p.table_->size(), 0), std::move(c));
    return p;
}

Poly Poly::variable(VarTablePtr table, std::size_t index) {
    if (index >= table->size())
        throw std::invalid_argument("variable index out of range");
    Poly p(std::move(table));
    Monomial m(p.table_->size(), 0);
    m[index] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Poly Poly::monomial(VarTablePtr table, Monomial m, Rational c) {
    if (m.size() != table->size())
        throw std::invalid_argument("monomial length does not match table size");
    for (int e : m)
        if (e < 0) throw std::invalid_argument("negative exponent");
    Poly p(std::move(table));
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && liftvf::total_degree(terms_.begin()->first) == 0;
}

Rational Poly::coeff(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_value() const {
    if (!is_constant()) throw std::invalid_argument("polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, liftvf::total_degree(m));
    return d;
}

bool operator==(const Poly& a, const Poly& b) {
    Poly::check_same_table(a, b);
    return a.terms_ == b.terms_;
}

void Poly::check_same_table(const Poly& a, const Poly& b) {
    if (a.table_ == b.table_) return;
    if (!a.table_->same_as(*b.table_))
        throw std::invalid_argument("polynomials live on different variable tables");
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    const auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(table_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& b) {
    check_same_table(*this, b);
    for (const auto& [m, c] : b.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& b) {
    check_same_table(*this, b);
    for (const auto& [m, c] : b.terms_) add_term(m, -c);
    return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    r += b;
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    r -= b;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly::check_same_table(a, b);
    Poly r(a.table_);
    const std::size_t n = a.table_->size();
    Monomial m(n, 0);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly operator*(const Rational& c, const Poly& p) {
    Poly r(p.table_);
    if (c == 0) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
}

Poly partial_derivative(const Poly& p, std::size_t var) {
    if (var >= p.table()->size())
        throw std::invalid_argument("unknown variable in partial_derivative");
    Poly r(p.table());
    for (const auto& [m, c] : p.terms()) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * m[var]);
    }
    return r;
}

Poly partial_derivative(const Poly& p, std::string_view var) {
    const auto idx = p.table()->index_of(var);
    if (!idx) throw std::invalid_argument("unknown variable '" + std::string(var) + "'");
    return partial_derivative(p, *idx);
}

int degree_in(const Poly& p, std::size_t var) {
    if (var >= p.table()->size())
        throw std::invalid_argument("unknown variable in degree_in");
    int d = -1;
    for (const auto& [m, c] : p.terms()) d = std::max(d, m[var]);
    return d;
}

Poly coeff_of_power(const Poly& p, std::size_t var, int e) {
    if (var >= p.table()->size())
        throw std::invalid_argument("unknown variable in coeff_of_power");
    Poly r = Poly::zero(p.table());
    for (const auto& [m, c] : p.terms()) {
        if (m[var] != e) continue;
        Monomial s = m;
        s[var] = 0;
        r += Poly::monomial(p.table(), std::move(s), c);
    }
    return r;
}

bool is_weighted_homogeneous(const Poly& p, int degree) {
    for (const auto& [m, c] : p.terms())
        if (weighted_degree(m, *p.table()) != degree) return false;
    return true;
}

std::optional<int> homogeneous_weighted_degree(const Poly& p) {
    std::optional<int> d;
    for (const auto& [m, c] : p.terms()) {
        const int w = weighted_degree(m, *p.table());
        if (!d)
            d = w;
        else if (*d != w)
            return std::nullopt;
    }
    return d;
}

Substitution::Substitution(VarTablePtr source, VarTablePtr target)
    : source_(std::move(source)), target_(std::move(target)),
      images_(source_->size()) {}

Substitution& Substitution::set(std::size_t var, Poly image) {
    if (var >= source_->size())
        throw std::invalid_argument("substitution variable index out of range");
    if (image.table() != target_ && !image.table()->same_as(*target_))
        throw std::invalid_argument("substitution image lives on the wrong table");
    images_[var] = std::move(image);
    return *this;
}

Substitution& Substitution::set(std::string_view var, Poly image) {
    const auto idx = source_->index_of(var);
    if (!idx) throw std::invalid_argument("unknown variable '" + std::string(var) + "'");
    return set(*idx, std::move(image));
}

Poly Substitution::apply(const Poly& p) const {
    if (p.table() != source_ && !p.table()->same_as(*source_))
        throw std::invalid_argument("polynomial does not live on the substitution source table");
    // Per-variable power cache, filled on demand.
    std::vector<std::vector<Poly>> powers(source_->size());
    const Poly one = Poly::constant(target_, Rational(1));
    Poly result = Poly::zero(target_);
    for (const auto& [m, c] : p.terms()) {
        Poly prod = Poly::constant(target_, c);
        for (std::size_t v = 0; v < m.size(); ++v) {
            const int e = m[v];
            if (e == 0) continue;
            if (!images_[v])
                throw std::invalid_argument("missing substitution image for variable '" +
                                            source_->name(v) + "'");
            auto& pw = powers[v];
            if (pw.empty()) pw.push_back(one);
            while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * *images_[v]);
            prod = prod * pw[e];
        }
        result += prod;
    }
    return result;
}

Substitution identity_substitution(VarTablePtr table) {
    Substitution s(table, table);
    for (std::size_t i = 0; i < table->size(); ++i)
        s.set(i, Poly::variable(table, i));
    return s;
}

namespace {

void render_abs_term(std::ostream& os, const VarTable& table, const Monomial& m,
                     const Rational& abs_coeff) {
    const bool trivial = total_degree(m) == 0;
    bool printed = false;
    if (abs_coeff != 1 || trivial) {
        os << to_string(abs_coeff);
        printed = true;
    }
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        if (printed) os << "*";
        os << table.name(v);
        if (m[v] > 1) os << "^" << m[v];
        printed = true;
    }
}

}  // namespace

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Reverse map order = ascending plain lex = neg-lex leading term first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        const bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        render_abs_term(os, *p.table(), m, neg ? Rational(-c) : c);
    }
    return os.str();
}

}  // namespace liftvf
