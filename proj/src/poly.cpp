#include "hyperkirch/poly.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace hyperkirch {

VariableSet VariableSet::of(const std::vector<std::size_t>& indices) {
    VariableSet s;
    for (std::size_t i : indices) s.insert(i);
    return s;
}

bool VariableSet::contains(std::size_t i) const {
    const std::size_t w = i / 64;
    return w < words_.size() && ((words_[w] >> (i % 64)) & 1U);
}

void VariableSet::insert(std::size_t i) {
    const std::size_t w = i / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (i % 64);
}

void VariableSet::erase(std::size_t i) {
    const std::size_t w = i / 64;
    if (w >= words_.size()) return;
    words_[w] &= ~(std::uint64_t{1} << (i % 64));
    trim();
}

void VariableSet::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

std::size_t VariableSet::size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::vector<std::size_t> VariableSet::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w)
        for (std::size_t b = 0; b < 64; ++b)
            if ((words_[w] >> b) & 1U) out.push_back(w * 64 + b);
    return out;
}

MultilinearPoly::MultilinearPoly(std::vector<std::string> variables) : variables_(std::move(variables)) {
    std::set<std::string> seen;
    for (const auto& v : variables_)
        if (!seen.insert(v).second) throw std::invalid_argument("repeated variable '" + v + "'");
}

MultilinearPoly MultilinearPoly::constant(std::vector<std::string> variables, const Integer& c) {
    MultilinearPoly p(std::move(variables));
    p.add_term(VariableSet{}, c);
    return p;
}

std::size_t MultilinearPoly::variable_index(const std::string& name) const {
    auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end()) throw std::invalid_argument("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - variables_.begin());
}

void MultilinearPoly::add_term(const VariableSet& monomial, const Integer& c) {
    if (c == 0) return;
    if (!monomial.empty() && monomial.indices().back() >= variables_.size())
        throw std::invalid_argument("monomial uses an undeclared variable");
    auto [it, inserted] = terms_.try_emplace(monomial, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Integer MultilinearPoly::evaluate(const std::vector<Integer>& x) const {
    if (x.size() != variables_.size())
        throw std::invalid_argument("evaluation point has the wrong number of coordinates");
    Integer total = 0;
    for (const auto& [mono, c] : terms_) {
        Integer t = c;
        for (std::size_t i : mono.indices()) t *= x[i];
        total += t;
    }
    return total;
}

Integer MultilinearPoly::evaluate(const std::map<std::string, Integer>& x) const {
    std::vector<Integer> dense;
    dense.reserve(variables_.size());
    for (const auto& v : variables_) {
        auto it = x.find(v);
        if (it == x.end()) throw std::invalid_argument("no value for variable '" + v + "'");
        dense.push_back(it->second);
    }
    return evaluate(dense);
}

MultilinearPoly MultilinearPoly::embed(const std::vector<std::string>& variables) const {
    MultilinearPoly out(variables);
    std::vector<std::size_t> where(variables_.size());
    for (std::size_t i = 0; i < variables_.size(); ++i) where[i] = out.variable_index(variables_[i]);
    for (const auto& [mono, c] : terms_) {
        VariableSet m;
        for (std::size_t i : mono.indices()) m.insert(where[i]);
        out.add_term(m, c);
    }
    return out;
}

MultilinearPoly MultilinearPoly::times_variable(const std::string& name) const {
    const std::size_t v = variable_index(name);
    MultilinearPoly out(variables_);
    for (const auto& [mono, c] : terms_) {
        if (mono.contains(v)) throw std::invalid_argument("product would not be multilinear");
        VariableSet m = mono;
        m.insert(v);
        out.add_term(m, c);
    }
    return out;
}

MultilinearPoly MultilinearPoly::operator+(const MultilinearPoly& other) const {
    MultilinearPoly out = *this;
    const MultilinearPoly rhs = other.variables_ == variables_ ? other : other.embed(variables_);
    for (const auto& [mono, c] : rhs.terms_) out.add_term(mono, c);
    return out;
}

bool MultilinearPoly::is_homogeneous(std::size_t degree) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.size() == degree; });
}

bool MultilinearPoly::has_unit_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second == 1; });
}

bool equal(const MultilinearPoly& p, const MultilinearPoly& q) {
    auto a = p.variables(), b = q.variables();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw std::invalid_argument("polynomials are over different variable sets");
    if (p.variables() == q.variables()) return p.terms() == q.terms();
    return p.terms() == q.embed(p.variables()).terms();
}

}  // namespace hyperkirch
