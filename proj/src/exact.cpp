#include "liebialg/exact.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lb {

Q parse_rational(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty rational");
    if (s[0] == '+') s.erase(0, 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        bool ok = std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || (ch == '-' && (i == 0 || s[i - 1] == '/'));
        if (!ok) throw std::invalid_argument("bad rational '" + raw + "'");
    }
    if (s.find('/') == std::string::npos && s.find('.') == std::string::npos) {
        Q q(s, 10);
        return q;
    }
    auto slash = s.find('/');
    mpz_class num(s.substr(0, slash), 10), den(s.substr(slash + 1), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + raw + "'");
    Q q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Q& q) { return q.get_str(10); }

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Q& x) { return x == 0; });
}

Vec scaled(const Vec& v, const Q& s) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * s;
    return r;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Q dot(const Vec& a, const Vec& b) {
    Q s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec unit(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

Vec QMatrix::row(std::size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

Vec QMatrix::col(std::size_t j) const {
    Vec v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vec QMatrix::apply(const Vec& v) const {
    Vec out(r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
    return out;
}

bool QMatrix::is_zero() const { return lb::is_zero(a_); }

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch");
    QMatrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t k = 0; k < a.c_; ++k) {
            const Q& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.c_; ++j)
                if (b(k, j) != 0) m(i, j) += x * b(k, j);
        }
    return m;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    QMatrix m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
    return m;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    QMatrix m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
    return m;
}

QMatrix operator*(const Q& s, const QMatrix& a) {
    QMatrix m = a;
    for (auto& x : m.a_) x *= s;
    return m;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

Echelon rref(const QMatrix& m) {
    std::size_t R = m.rows(), C = m.cols();
    std::vector<Vec> rows(R);
    for (std::size_t i = 0; i < R; ++i) rows[i] = m.row(i);
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && rows[p][c] == 0) ++p;
        if (p == R) continue;
        std::swap(rows[r], rows[p]);
        Q inv = 1 / rows[r][c];
        for (std::size_t j = c; j < C; ++j) rows[r][j] *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Q f = rows[i][c];
            for (std::size_t j = c; j < C; ++j)
                if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    rows.resize(r);
    return {QMatrix::from_rows(rows, C), piv};
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

Q det(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    std::size_t n = m.rows();
    QMatrix a = m;
    Q d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            d = -d;
        }
        d *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            Q f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return d;
}

RankKernel rank_kernel(const QMatrix& m) {
    Echelon e = rref(m);
    std::size_t C = m.cols();
    std::vector<bool> is_piv(C, false);
    for (auto p : e.pivots) is_piv[p] = true;
    std::vector<Vec> ker;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_piv[f]) continue;
        Vec v(C);
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.r(i, f);
        ker.push_back(std::move(v));
    }
    return {e.pivots.size(), canonical_basis(ker, C)};
}

std::vector<Vec> canonical_basis(const std::vector<Vec>& vs, std::size_t dim) {
    if (vs.empty()) return {};
    Echelon e = rref(QMatrix::from_rows(vs, dim));
    std::vector<Vec> out;
    for (std::size_t i = 0; i < e.r.rows(); ++i) out.push_back(e.r.row(i));
    return out;
}

Vec reduce_mod(const std::vector<Vec>& canon, const Vec& v) {
    Vec r = v;
    for (const auto& b : canon) {
        std::size_t p = 0;
        while (p < b.size() && b[p] == 0) ++p;
        if (p == b.size() || r[p] == 0) continue;
        Q f = r[p] / b[p];
        for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f * b[j];
    }
    return r;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
    if (basis.empty()) return is_zero(v);
    return is_zero(reduce_mod(canonical_basis(basis, v.size()), v));
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t dim) {
    return canonical_basis(a, dim) == canonical_basis(b, dim);
}

std::vector<Vec> intersect(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t dim) {
    if (a.empty() || b.empty()) return {};
    // x = sum s_i a_i = sum t_j b_j  <=>  [A^T | -B^T](s,t) = 0
    std::size_t na = a.size(), nb = b.size();
    QMatrix m(dim, na + nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t k = 0; k < dim; ++k) m(k, i) = a[i][k];
    for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t k = 0; k < dim; ++k) m(k, na + j) = -b[j][k];
    std::vector<Vec> out;
    for (const auto& st : rank_kernel(m).kernel) {
        Vec x(dim);
        for (std::size_t i = 0; i < na; ++i)
            if (st[i] != 0) x = add(x, scaled(a[i], st[i]));
        out.push_back(x);
    }
    return canonical_basis(out, dim);
}

std::variant<AffineSolution, Inconsistent> solve_linear(const QMatrix& a, const Vec& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: rows(A) != len(b)");
    std::size_t C = a.cols();
    QMatrix aug(a.rows(), C + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < C; ++j) aug(i, j) = a(i, j);
        aug(i, C) = b[i];
    }
    Echelon e = rref(aug);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        if (e.pivots[i] == C) return Inconsistent{i};
    Vec x(C);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.r(i, C);
    return AffineSolution{x, rank_kernel(a).kernel};
}

// ---------------------------------------------------------------- Poly

Poly Poly::constant(std::size_t nvars, const Q& c) {
    Poly p(nvars);
    p.add_term(Mono(nvars, 0), c);
    return p;
}

Poly Poly::var(std::size_t nvars, std::size_t i) {
    Poly p(nvars);
    Mono m(nvars, 0);
    m[i] = 1;
    p.add_term(m, 1);
    return p;
}

Poly Poly::linear(const Vec& coeffs) {
    Poly p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Mono m(coeffs.size(), 0);
        m[i] = 1;
        p.add_term(m, coeffs[i]);
    }
    return p;
}

void Poly::add_term(const Mono& m, const Q& c) {
    if (c == 0) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) t_.erase(it);
}

bool Poly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && degree() == 0);
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) {
        int s = 0;
        for (auto e : m) s += static_cast<int>(e);
        d = std::max(d, s);
    }
    return d;
}

Q Poly::eval(const Vec& x) const {
    if (x.size() != n_) throw std::invalid_argument("poly_eval: point has wrong length");
    Q s = 0;
    for (const auto& [m, c] : t_) {
        Q term = c;
        for (std::size_t i = 0; i < n_ && term != 0; ++i)
            for (unsigned e = 0; e < m[i]; ++e) term *= x[i];
        s += term;
    }
    return s;
}

Poly Poly::derivative(std::size_t i) const {
    Poly d(n_);
    for (const auto& [m, c] : t_) {
        if (m[i] == 0) continue;
        Mono k = m;
        k[i] -= 1;
        d.add_term(k, c * m[i]);
    }
    return d;
}

Poly Poly::substitute_zero(std::size_t i) const {
    Poly d(n_);
    for (const auto& [m, c] : t_)
        if (m[i] == 0) d.add_term(m, c);
    return d;
}

const Poly::Mono& Poly::leading_monomial() const {
    if (t_.empty()) throw std::logic_error("leading monomial of zero polynomial");
    return t_.rbegin()->first;
}

const Q& Poly::leading_coeff() const {
    if (t_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return t_.rbegin()->second;
}

Poly Poly::monic() const {
    if (t_.empty()) return *this;
    Q inv = 1 / leading_coeff();
    return inv * (*this);
}

std::optional<Vec> Poly::as_linear_form() const {
    Vec v(n_);
    for (const auto& [m, c] : t_) {
        unsigned s = 0;
        std::size_t at = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            s += m[i];
            if (m[i]) at = i;
        }
        if (s != 1) return std::nullopt;
        v[at] = c;
    }
    return v;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [m, c] = *it;
        Q a = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool has_var = false;
        std::ostringstream vars;
        for (std::size_t i = 0; i < n_; ++i) {
            if (!m[i]) continue;
            if (has_var) vars << "*";
            vars << "x" << (i + 1);
            if (m[i] > 1) vars << "^" << m[i];
            has_var = true;
        }
        if (!has_var) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << "*";
            os << vars.str();
        }
    }
    return os.str();
}

Poly Poly::operator-() const { return Q(-1) * (*this); }

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    if (r.n_ == 0) r.n_ = b.n_;
    for (const auto& [m, c] : b.t_) r.add_term(m, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    Poly r(std::max(a.n_, b.n_));
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) {
            Poly::Mono m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

Poly operator*(const Q& s, const Poly& a) {
    Poly r(a.n_);
    if (s == 0) return r;
    for (const auto& [m, c] : a.t_) r.t_.emplace(m, c * s);
    return r;
}

bool operator<(const Poly& a, const Poly& b) {
    // compare term lists from the leading end
    auto ia = a.t_.rbegin(), ib = b.t_.rbegin();
    for (; ia != a.t_.rend() && ib != b.t_.rend(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.t_.rend() && ib != b.t_.rend();
}

Q poly_eval(const Poly& p, const Vec& point) { return p.eval(point); }

std::vector<Poly::Mono> monomials_up_to(std::size_t n, unsigned d) {
    std::vector<Poly::Mono> out;
    Poly::Mono m(n, 0);
    // recursive fill by total degree
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i == n) {
            if (left == 0) out.push_back(m);
            return;
        }
        for (int e = static_cast<int>(left); e >= 0; --e) {
            m[i] = static_cast<unsigned>(e);
            self(self, i + 1, left - static_cast<unsigned>(e));
        }
        m[i] = 0;
    };
    for (unsigned k = 0; k <= d; ++k) rec(rec, 0, k);
    return out;
}

// ---------------------------------------------------------------- parser

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    std::size_t n;
    const std::map<std::string, Q>& sym;

    [[noreturn]] void fail(const std::string& what) const {
        throw PolyParseError("at " + std::to_string(pos) + " in '" + s + "': " + what);
    }
    void ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    Poly expr() {
        Poly acc(n);
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Poly t = term();
        acc = neg ? -t : t;
        for (;;) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else break;
        }
        return acc;
    }
    Poly term() {
        Poly p = power();
        for (;;) {
            if (eat('*')) {
                p = p * power();
            } else if (eat('/')) {
                Poly d = power();
                if (!d.is_constant() || d.is_zero()) fail("division by non-constant or zero");
                Q c = d.terms().begin()->second;
                p = Q(1 / c) * p;
            } else {
                break;
            }
        }
        return p;
    }
    Poly power() {
        Poly b = atom();
        if (eat('^')) {
            ws();
            std::size_t st = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (st == pos) fail("exponent expected");
            int e = std::stoi(s.substr(st, pos - st));
            Poly r = Poly::constant(n, 1);
            for (int i = 0; i < e; ++i) r = r * b;
            return r;
        }
        return b;
    }
    Poly atom() {
        ws();
        if (pos >= s.size()) fail("unexpected end");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Poly p = expr();
            if (!eat(')')) fail("')' expected");
            return p;
        }
        if (c == '-') {
            ++pos;
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t st = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return Poly::constant(n, Q(mpz_class(s.substr(st, pos - st), 10)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t st = pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
            std::string id = s.substr(st, pos - st);
            if (id.size() > 1 && id[0] == 'x' &&
                std::all_of(id.begin() + 1, id.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
                std::size_t i = std::stoul(id.substr(1));
                if (i < 1 || i > n) fail("variable " + id + " out of range");
                return Poly::var(n, i - 1);
            }
            auto it = sym.find(id);
            if (it == sym.end()) fail("unknown symbol " + id);
            return Poly::constant(n, it->second);
        }
        fail(std::string("unexpected '") + c + "'");
    }
};

} // namespace

Poly parse_poly(const std::string& s, std::size_t nvars, const std::map<std::string, Q>& symbols) {
    Parser p{s, 0, nvars, symbols};
    Poly r = p.expr();
    p.ws();
    if (p.pos != s.size()) p.fail("trailing input");
    Poly out(nvars);
    for (const auto& [m, c] : r.terms()) out.add_term(m, c);
    return out;
}

} // namespace lb

namespace lb {

bool Constraint::holds(const Vec& x) const {
    Q v = p.eval(x);
    switch (rel) {
    case Rel::eq: return v == 0;
    case Rel::ne: return v != 0;
    case Rel::gt: return v > 0;
    case Rel::lt: return v < 0;
    case Rel::ge: return v >= 0;
    case Rel::le: return v <= 0;
    }
    return false;
}

std::string Constraint::str() const {
    static const char* ops[] = {"=", "!=", ">", "<", ">=", "<="};
    return p.str() + " " + ops[static_cast<int>(rel)] + " 0";
}

Constraint parse_constraint(const std::string& s, std::size_t nvars, const std::map<std::string, Q>& symbols) {
    static const std::vector<std::pair<std::string, Constraint::Rel>> ops = {
        {"!=", Constraint::Rel::ne}, {">=", Constraint::Rel::ge}, {"<=", Constraint::Rel::le},
        {"==", Constraint::Rel::eq}, {"=", Constraint::Rel::eq},  {">", Constraint::Rel::gt},
        {"<", Constraint::Rel::lt}};
    for (const auto& [op, rel] : ops) {
        auto at = s.find(op);
        if (at == std::string::npos) continue;
        Poly lhs = parse_poly(s.substr(0, at), nvars, symbols);
        Poly rhs = parse_poly(s.substr(at + op.size()), nvars, symbols);
        return {lhs - rhs, rel};
    }
    throw PolyParseError("no relation operator in '" + s + "'");
}

} // namespace lb
