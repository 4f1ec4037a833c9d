#include "vergne/exterior.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iterator>
#include <utility>

#include "vergne/errors.hpp"

namespace vergne {

namespace {

void check_ambient(int ambient) {
    if (ambient < 0 || ambient > kMaxDimension)
        throw InvalidArgument("ambient dimension " + std::to_string(ambient) + " outside [0, 64]");
}

void require_same_ambient(int a, int b) {
    if (a != b)
        throw AmbientMismatch("ambient dimensions differ: " + std::to_string(a) + " vs " +
                              std::to_string(b));
}

// Sorted canonical sequence with pairs removed.
void normalize(std::vector<Monomial>& terms) {
    std::sort(terms.begin(), terms.end());
    std::vector<Monomial> out;
    out.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(terms[i]);
        i = j;
    }
    terms = std::move(out);
}

}  // namespace

Monomial Monomial::of(std::initializer_list<int> indices) {
    std::uint64_t bits = 0;
    for (int i : indices) {
        if (i < 1 || i > kMaxDimension) throw InvalidArgument("generator index out of range");
        bits |= std::uint64_t{1} << (i - 1);
    }
    return Monomial(bits);
}

int Monomial::degree() const {
    int sum = 0;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) sum += std::countr_zero(b) + 1;
    return sum;
}

std::vector<int> Monomial::indices() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
}

std::strong_ordering operator<=>(Monomial a, Monomial b) {
    if (auto c = a.top_degree() <=> b.top_degree(); c != 0) return c;
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return std::strong_ordering::equal;
    // Equal size: the first position where the sorted tuples differ holds the
    // smallest index in the symmetric difference.
    const std::uint64_t lowest = diff & (~diff + 1);
    return (a.bits() & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
}

Form::Form(int ambient) : ambient_(ambient) { check_ambient(ambient); }

Form::Form(int ambient, Monomial m) : ambient_(ambient), terms_{m} {
    check_ambient(ambient);
    if (m.max_index() > ambient) throw InvalidArgument("monomial exceeds ambient dimension");
}

Form::Form(int ambient, std::vector<Monomial> terms) : ambient_(ambient), terms_(std::move(terms)) {
    check_ambient(ambient);
    for (auto m : terms_)
        if (m.max_index() > ambient) throw InvalidArgument("monomial exceeds ambient dimension");
    normalize(terms_);
}

bool Form::contains(Monomial m) const { return std::binary_search(terms_.begin(), terms_.end(), m); }

bool Form::is_top_homogeneous(int k) const {
    return std::all_of(terms_.begin(), terms_.end(), [k](Monomial m) { return m.top_degree() == k; });
}

bool Form::is_homogeneous(int m) const {
    return std::all_of(terms_.begin(), terms_.end(), [m](Monomial t) { return t.degree() == m; });
}

Form& Form::operator+=(const Form& other) {
    require_same_ambient(ambient_, other.ambient_);
    std::vector<Monomial> out;
    out.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                  other.terms_.end(), std::back_inserter(out));
    terms_ = std::move(out);
    return *this;
}

std::optional<Monomial> wedge(Monomial a, Monomial b) {
    if (a.bits() & b.bits()) return std::nullopt;
    return Monomial(a.bits() | b.bits());
}

Form wedge(const Form& a, const Form& b) {
    require_same_ambient(a.ambient(), b.ambient());
    std::vector<Monomial> out;
    for (auto x : a.terms())
        for (auto y : b.terms())
            if (auto p = wedge(x, y)) out.push_back(*p);
    return Form(a.ambient(), std::move(out));
}

Form wedge(const Form& a, Monomial b) { return wedge(a, Form(a.ambient(), b)); }

std::vector<Monomial> basis(int n, int k) {
    check_ambient(n);
    std::vector<Monomial> out;
    if (k < 0 || k > n) return out;
    // Combinations in lexicographic order of the index tuple.
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    while (true) {
        std::uint64_t bits = 0;
        for (int i : idx) bits |= std::uint64_t{1} << (i - 1);
        out.emplace_back(bits);
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos + 1) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<Monomial> basis_graded(int n, int k, int m) {
    std::vector<Monomial> out;
    for (auto mono : basis(n, k))
        if (mono.degree() == m) out.push_back(mono);
    return out;
}

std::map<int, std::vector<Monomial>> graded_slices(int n, int k) {
    std::map<int, std::vector<Monomial>> slices;
    if (k < 0 || k > n) return slices;
    for (int m = min_degree(n, k); m <= max_degree(n, k); ++m) slices[m];
    for (auto mono : basis(n, k)) slices[mono.degree()].push_back(mono);
    return slices;
}

LinearOperator::LinearOperator(int ambient, MonomialMap on_monomial)
    : ambient_(ambient), on_monomial_(std::move(on_monomial)) {
    check_ambient(ambient);
}

LinearOperator LinearOperator::zero(int ambient) {
    return LinearOperator(ambient, [ambient](Monomial) { return Form(ambient); });
}

LinearOperator LinearOperator::identity(int ambient) {
    return LinearOperator(ambient, [ambient](Monomial m) { return Form(ambient, m); });
}

Form LinearOperator::operator()(Monomial m) const { return on_monomial_(m); }

Form LinearOperator::operator()(const Form& f) const {
    require_same_ambient(ambient_, f.ambient());
    std::vector<Monomial> acc;
    for (auto m : f.terms()) {
        const Form image = on_monomial_(m);
        acc.insert(acc.end(), image.terms().begin(), image.terms().end());
    }
    return Form(ambient_, std::move(acc));
}

LinearOperator derivation(int ambient, std::vector<Form> images) {
    check_ambient(ambient);
    images.resize(static_cast<std::size_t>(ambient) + 1, Form(ambient));
    for (const auto& img : images) require_same_ambient(ambient, img.ambient());
    return LinearOperator(ambient, [ambient, images = std::move(images)](Monomial m) {
        std::vector<Monomial> acc;
        for (std::uint64_t b = m.bits(); b != 0; b &= b - 1) {
            const int i = std::countr_zero(b) + 1;
            const Monomial rest = m.without(i);
            for (auto t : images[i].terms())
                if (auto p = wedge(rest, t)) acc.push_back(*p);
        }
        return Form(ambient, std::move(acc));
    });
}

LinearOperator compose(const LinearOperator& a, const LinearOperator& b) {
    require_same_ambient(a.ambient(), b.ambient());
    return LinearOperator(a.ambient(), [a, b](Monomial m) { return a(b(m)); });
}

LinearOperator sum(const LinearOperator& a, const LinearOperator& b) {
    require_same_ambient(a.ambient(), b.ambient());
    return LinearOperator(a.ambient(), [a, b](Monomial m) { return a(m) + b(m); });
}

LinearOperator wedge_left(const Form& left, const LinearOperator& op) {
    require_same_ambient(left.ambient(), op.ambient());
    return LinearOperator(op.ambient(), [left, op](Monomial m) { return wedge(left, op(m)); });
}

BitMatrix matrix_of(const LinearOperator& op, const std::vector<Monomial>& domain,
                    const std::vector<Monomial>& codomain) {
    std::vector<std::pair<Monomial, std::size_t>> index;
    index.reserve(codomain.size());
    for (std::size_t i = 0; i < codomain.size(); ++i) index.emplace_back(codomain[i], i);
    std::sort(index.begin(), index.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    BitMatrix m(codomain.size(), domain.size());
    for (std::size_t j = 0; j < domain.size(); ++j) {
        const Form image = op(domain[j]);
        for (auto t : image.terms()) {
            auto it = std::lower_bound(index.begin(), index.end(), t,
                                       [](const auto& x, Monomial v) { return x.first < v; });
            if (it == index.end() || it->first != t)
                throw ImageOutsideCodomain("image term " + to_string(t) + " of " +
                                           to_string(domain[j]) + " is not in the codomain");
            m.flip(it->second, j);
        }
    }
    return m;
}

std::string to_string(Monomial m) {
    if (m.empty()) return "1";
    std::string out;
    for (int i : m.indices()) {
        if (!out.empty()) out += '^';
        out += 'e';
        out += std::to_string(i);
    }
    return out;
}

std::string to_string(const Form& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (auto m : f.terms()) {
        if (!out.empty()) out += " + ";
        out += to_string(m);
    }
    return out;
}

Form parse_form(std::string_view text, int ambient) {
    check_ambient(ambient);
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    if (compact.empty()) throw ParseError("empty form");

    std::vector<Monomial> terms;
    std::size_t start = 0;
    while (start <= compact.size()) {
        const std::size_t plus = std::min(compact.find('+', start), compact.size());
        const std::string_view term(compact.data() + start, plus - start);
        if (term.empty()) throw ParseError("empty term in '" + std::string(text) + "'");
        if (term == "1") {
            terms.emplace_back();
        } else if (term != "0") {
            std::uint64_t bits = 0;
            bool vanishes = false;
            std::size_t fstart = 0;
            while (fstart <= term.size()) {
                const std::size_t caret = std::min(term.find('^', fstart), term.size());
                const std::string_view factor = term.substr(fstart, caret - fstart);
                if (factor.size() < 2 || factor[0] != 'e')
                    throw ParseError("bad factor '" + std::string(factor) + "'");
                int index = 0;
                auto [ptr, ec] =
                    std::from_chars(factor.data() + 1, factor.data() + factor.size(), index);
                if (ec != std::errc{} || ptr != factor.data() + factor.size())
                    throw ParseError("bad generator index in '" + std::string(factor) + "'");
                if (index < 1 || index > ambient)
                    throw ParseError("generator e" + std::to_string(index) +
                                     " outside ambient dimension " + std::to_string(ambient));
                const std::uint64_t bit = std::uint64_t{1} << (index - 1);
                if (bits & bit) vanishes = true;
                bits |= bit;
                fstart = caret + 1;
            }
            if (!vanishes) terms.emplace_back(bits);
        }
        start = plus + 1;
    }
    return Form(ambient, std::move(terms));
}

}  // namespace vergne
