#include "vergne/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace vergne {

namespace {

void check_dimension(int n) {
    if (n < kMinDimension || n > kMaxDimension)
        throw InvalidArgument("dimension " + std::to_string(n) + " outside [5, 64]");
}

[[noreturn]] void raise(const JacobiFailure& f) {
    throw JacobiViolation(f.describe(), f.i, f.j, f.k);
}

}  // namespace

// ---------------------------------------------------------------------------
// RowVector

RowVector::RowVector(int n, std::vector<std::uint8_t> entries) : n_(n), entries_(std::move(entries)) {
    if (n < 2 || n > kMaxDimension) throw InvalidArgument("row dimension out of range");
    if (entries_.size() != static_cast<std::size_t>(n - 1))
        throw InvalidArgument("row of dimension " + std::to_string(n) + " needs " +
                              std::to_string(n - 1) + " entries");
    for (auto& e : entries_)
        if (e > 1) throw InvalidArgument("row entries must be 0 or 1");
}

RowVector RowVector::zeros(int n) {
    return RowVector(n, std::vector<std::uint8_t>(static_cast<std::size_t>(std::max(n - 1, 0)), 0));
}

RowVector RowVector::parse(std::string_view text) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    if (!compact.empty() && compact.front() == '[') {
        if (compact.back() != ']') throw ParseError("unbalanced bracket in row '" + std::string(text) + "'");
        compact = compact.substr(1, compact.size() - 2);
    }
    const bool has_commas = compact.find(',') != std::string::npos;
    std::vector<std::uint8_t> entries;
    for (std::size_t i = 0; i < compact.size(); ++i) {
        const char c = compact[i];
        if (c == '0' || c == '1') {
            entries.push_back(static_cast<std::uint8_t>(c - '0'));
            if (has_commas && i + 1 < compact.size() && compact[i + 1] != ',')
                throw ParseError("row entries must be single 0/1 digits: '" + std::string(text) + "'");
        } else if (c == ',' && has_commas) {
            if (i == 0 || compact[i - 1] == ',' || i + 1 == compact.size())
                throw ParseError("empty row entry in '" + std::string(text) + "'");
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "' in row '" +
                             std::string(text) + "'");
        }
    }
    if (entries.empty()) throw ParseError("empty row");
    const int n = static_cast<int>(entries.size()) + 1;
    if (n > kMaxDimension) throw ParseError("row too long");
    return RowVector(n, std::move(entries));
}

bool RowVector::padding_ok() const {
    if (n_ < 4) return false;
    return !at(2) && !at(n_ - 1) && !at(n_);
}

std::uint64_t RowVector::code() const {
    std::uint64_t out = 0;
    for (int j = 3; j <= n_ - 2; ++j) out = (out << 1) | (at(j) ? 1U : 0U);
    return out;
}

RowVector RowVector::from_code(int n, std::uint64_t code) {
    RowVector r = zeros(n);
    for (int j = n - 2; j >= 3; --j) {
        r.set(j, code & 1U);
        code >>= 1;
    }
    return r;
}

std::string RowVector::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ", ";
        out += entries_[i] ? '1' : '0';
    }
    return out + "]";
}

// ---------------------------------------------------------------------------
// StructureConstants

StructureConstants::StructureConstants(int n) : n_(n), upper_(static_cast<std::size_t>(n) + 1, 0) {
    if (n < 0 || n > kMaxDimension) throw InvalidArgument("dimension out of range");
}

bool StructureConstants::operator()(int i, int j) const {
    if (!in_range(i, j)) return false;
    if (i > j) std::swap(i, j);
    return (upper_[i] >> (j - 1)) & 1U;
}

void StructureConstants::set(int i, int j, bool value) {
    if (!in_range(i, j))
        throw InvalidArgument("c(" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    if (i > j) std::swap(i, j);
    const std::uint64_t bit = std::uint64_t{1} << (j - 1);
    upper_[i] = value ? (upper_[i] | bit) : (upper_[i] & ~bit);
}

// ---------------------------------------------------------------------------
// Jacobi checks

std::string JacobiFailure::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Padding:
            os << "row padding entry r" << i << " must be 0";
            break;
        case Kind::Alternation:
            os << "alternation fails: derived c(" << i << "," << i << ") = 1";
            break;
        case Kind::Completion:
            os << "e1-Jacobi identity fails: c(" << i << "," << j << ") != c(" << i + 1 << "," << j
               << ") + c(" << i << "," << j + 1 << ")";
            break;
        case Kind::Triple:
            os << "Jacobi identity fails on (e" << i << ", e" << j << ", e" << k << ")";
            break;
        case Kind::SquareNonzero:
            os << "d(d(e" << i << ")) != 0 although the identity checks pass";
            break;
    }
    return os.str();
}

std::optional<JacobiFailure> find_jacobi_failure(const StructureConstants& c) {
    const int n = c.dimension();
    for (int i = 2; i <= n; ++i) {
        for (int j = i + 1; i + j + 1 <= n; ++j) {
            if (c(i, j) != (c(i + 1, j) != c(i, j + 1))) {
                if (j == i + 1) return JacobiFailure{JacobiFailure::Kind::Alternation, j, 0, 0};
                return JacobiFailure{JacobiFailure::Kind::Completion, i, j, 0};
            }
        }
    }
    for (int i = 2; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; i + j + k <= n; ++k) {
                const bool s = ((c(j, k) && c(i, j + k)) != (c(i, k) && c(j, i + k))) !=
                               (c(i, j) && c(k, i + j));
                if (s) return JacobiFailure{JacobiFailure::Kind::Triple, i, j, k};
            }
    return std::nullopt;
}

bool jacobi_holds(const StructureConstants& c) { return !find_jacobi_failure(c).has_value(); }

std::vector<Form> differential_images(const StructureConstants& c) {
    const int n = c.dimension();
    std::vector<Form> images(static_cast<std::size_t>(n) + 1, Form(n));
    for (int k = 3; k <= n; ++k) {
        std::vector<Monomial> terms{Monomial::of({1, k - 1})};
        for (int i = 2; 2 * i < k; ++i)
            if (c(i, k - i)) terms.push_back(Monomial::of({i, k - i}));
        images[k] = Form(n, std::move(terms));
    }
    return images;
}

namespace {

// First generator k with d(d(e^k)) != 0, or 0.
int first_square_failure(const StructureConstants& c) {
    const int n = c.dimension();
    auto images = differential_images(c);
    const auto d = derivation(n, images);
    for (int k = 1; k <= n; ++k)
        if (!d(images[k]).is_zero()) return k;
    return 0;
}

}  // namespace

bool square_vanishes(const StructureConstants& c) { return first_square_failure(c) == 0; }

// ---------------------------------------------------------------------------
// VergneAlgebra

VergneAlgebra VergneAlgebra::m0(int n) {
    check_dimension(n);
    return VergneAlgebra(StructureConstants(n));
}

VergneAlgebra VergneAlgebra::m2(int n) {
    check_dimension(n);
    RowVector r = RowVector::zeros(n);
    for (int j = 3; j <= n - 2; ++j) r.set(j, true);
    return from_row(r);
}

VergneAlgebra VergneAlgebra::from_row(const RowVector& row) {
    const int n = row.dimension();
    check_dimension(n);
    for (int j : {2, n - 1, n})
        if (row.at(j)) raise({JacobiFailure::Kind::Padding, j, 0, 0});

    StructureConstants c(n);
    for (int j = 3; 2 + j <= n; ++j) c.set(2, j, row.at(j));
    // c(i+1, j) = c(i, j) + c(i, j+1), filled row by row for j > i + 1; the
    // j = i + 1 instances are the alternation conditions checked below.
    for (int i = 3; 2 * i + 1 <= n; ++i)
        for (int j = i + 1; i + j <= n; ++j) c.set(i, j, c(i - 1, j) != c(i - 1, j + 1));
    return from_constants(std::move(c));
}

VergneAlgebra VergneAlgebra::from_constants(StructureConstants c) {
    check_dimension(c.dimension());
    if (auto failure = find_jacobi_failure(c)) raise(*failure);
    if (int k = first_square_failure(c)) raise({JacobiFailure::Kind::SquareNonzero, k, 0, 0});
    return VergneAlgebra(std::move(c));
}

RowVector VergneAlgebra::row() const {
    const int n = dimension();
    RowVector r = RowVector::zeros(n);
    for (int j = 3; 2 + j <= n; ++j) r.set(j, c(2, j));
    return r;
}

std::uint64_t VergneAlgebra::bracket(std::uint64_t u, std::uint64_t v) const {
    const int n = dimension();
    std::uint64_t out = 0;
    for (int i = 1; i <= n; ++i) {
        if (!((u >> (i - 1)) & 1U)) continue;
        for (int j = 1; j <= n; ++j) {
            if (!((v >> (j - 1)) & 1U) || i == j) continue;
            const int a = std::min(i, j);
            const int b = std::max(i, j);
            const bool nonzero = a == 1 ? b + 1 <= n : c(a, b);
            if (nonzero) out ^= std::uint64_t{1} << (a + b - 1);
        }
    }
    return out;
}

VergneAlgebra VergneAlgebra::truncated() const {
    const int n = dimension();
    if (n <= kMinDimension) throw InvalidArgument("cannot truncate below dimension 5");
    StructureConstants t(n - 1);
    for (int i = 2; i <= n - 1; ++i)
        for (int j = i + 1; i + j <= n - 1; ++j) t.set(i, j, c(i, j));
    return from_constants(std::move(t));
}

// ---------------------------------------------------------------------------
// Operators

LinearOperator differential(const VergneAlgebra& g) {
    return derivation(g.dimension(), differential_images(g.constants()));
}

LinearOperator operator_D1(int n) {
    std::vector<Form> images(static_cast<std::size_t>(n) + 1, Form(n));
    for (int i = 3; i <= n; ++i) images[i] = Form::generator(n, i - 1);
    return derivation(n, std::move(images));
}

LinearOperator operator_D2(int n) {
    std::vector<Form> images(static_cast<std::size_t>(n) + 1, Form(n));
    for (int i = 5; i <= n; ++i) images[i] = Form::generator(n, i - 2);
    return derivation(n, std::move(images));
}

LinearOperator operator_R(const VergneAlgebra& g) {
    const int n = g.dimension();
    return sum(wedge_left(Form::generator(n, 1), operator_D1(n)), differential(g));
}

Split split_e1_e2(const Form& h) {
    const int n = h.ambient();
    std::vector<Monomial> x, y, z;
    for (auto m : h.terms()) {
        if (m.contains(1))
            x.push_back(m.without(1));
        else if (m.contains(2))
            y.push_back(m.without(2));
        else
            z.push_back(m);
    }
    return {Form(n, std::move(x)), Form(n, std::move(y)), Form(n, std::move(z))};
}

Involution::Involution(int n) : n_(n), d1_(operator_D1(n)) {}

Form Involution::operator()(const Form& h) const {
    if (h.ambient() != n_) throw AmbientMismatch("involution ambient differs from form ambient");
    for (auto m : h.terms())
        if (m.top_degree() < 2 || m.top_degree() > n_)
            throw InvalidArgument("involution defined on k-forms with 2 <= k <= n; got term " +
                                  to_string(m));
    const Split s = split_e1_e2(h);
    return h + wedge(Form::generator(n_, 2), d1_(s.x));
}

Form involution_f(int n, const Form& h) { return Involution(n)(h); }

}  // namespace vergne
