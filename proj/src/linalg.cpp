#include "sturmalg/linalg.hpp"

#include <algorithm>

namespace sturmalg {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

/// r -> (b*r - a*p) / content, where a = leading coeff of r on p's pivot
/// column and b = p's leading coeff. Both rows primitive integer.
void eliminate(SparseRow& r, const Rat& a, const SparseRow& p) {
    const Rat b = p.leading_coeff();
    std::vector<std::pair<int, Rat>> out;
    out.reserve(r.terms.size() + p.terms.size());
    auto it = r.terms.begin();
    auto jt = p.terms.begin();
    while (it != r.terms.end() || jt != p.terms.end()) {
        if (jt == p.terms.end() || (it != r.terms.end() && it->first < jt->first)) {
            out.emplace_back(it->first, it->second * b);
            ++it;
        } else if (it == r.terms.end() || jt->first < it->first) {
            out.emplace_back(jt->first, -(jt->second * a));
            ++jt;
        } else {
            Rat v = it->second * b - jt->second * a;
            if (v != 0) out.emplace_back(it->first, std::move(v));
            ++it;
            ++jt;
        }
    }
    r.terms = std::move(out);
    r.make_primitive();
}

} // namespace

void SparseRow::sort_and_combine() {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<int, Rat>> out;
    out.reserve(terms.size());
    for (auto& [c, v] : terms) {
        if (!out.empty() && out.back().first == c)
            out.back().second += v;
        else
            out.emplace_back(c, std::move(v));
    }
    std::erase_if(out, [](const auto& t) { return t.second == 0; });
    terms = std::move(out);
}

void SparseRow::make_primitive() {
    if (terms.empty()) return;
    Int den_lcm = 1;
    for (const auto& [c, v] : terms) den_lcm = lcm(den_lcm, denominator(v));
    Int content = 0;
    std::vector<Int> ints;
    ints.reserve(terms.size());
    for (const auto& [c, v] : terms) {
        Int n = numerator(v) * (den_lcm / denominator(v));
        content = gcd(content, abs(n));
        ints.push_back(std::move(n));
    }
    const int lead_sign = ints.front() < 0 ? -1 : 1;
    for (std::size_t i = 0; i < terms.size(); ++i)
        terms[i].second = Rat(lead_sign * ints[i] / content);
}

SparseRow sparse_row(std::vector<std::pair<int, Rat>> terms) {
    SparseRow r;
    r.terms = std::move(terms);
    r.sort_and_combine();
    return r;
}

bool EchelonBasis::ingest(SparseRow r, std::vector<SparseRow>* residuals) {
    r.make_primitive();
    while (!r.empty() && in_pivot_zone(r.leading_col())) {
        auto it = pivots_.find(r.leading_col());
        if (it == pivots_.end()) {
            pivots_.emplace(r.leading_col(), std::move(r));
            return true;
        }
        eliminate(r, r.leading_coeff(), it->second);
    }
    if (!r.empty() && residuals) residuals->push_back(std::move(r));
    return false;
}

void EchelonBasis::merge(const EchelonBasis& other) {
    for (const auto& [col, row] : other.pivot_rows()) ingest(row);
}

long rank_of_rows(const std::vector<SparseRow>& rows) {
    EchelonBasis basis;
    for (const auto& r : rows) basis.ingest(r);
    return basis.rank();
}

std::vector<std::vector<Rat>> kernel_of_columns(const std::vector<SparseRow>& cols,
                                                int ambient) {
    EchelonBasis basis(ambient);
    std::vector<SparseRow> residuals;
    const int m = static_cast<int>(cols.size());
    for (int j = 0; j < m; ++j) {
        SparseRow r = cols[j];
        r.terms.emplace_back(ambient + j, Rat(1)); // identity augment
        basis.ingest(std::move(r), &residuals);
    }
    std::vector<std::vector<Rat>> kernel;
    kernel.reserve(residuals.size());
    for (const auto& r : residuals) {
        std::vector<Rat> z(m, Rat(0));
        for (const auto& [c, v] : r.terms) z[static_cast<std::size_t>(c - ambient)] = v;
        kernel.push_back(std::move(z));
    }
    return kernel;
}

long intersect_column_spans(const std::vector<std::vector<SparseRow>>& spans, int ambient) {
    if (spans.empty()) throw std::domain_error("need at least one span");
    auto reduce_to_basis = [](const std::vector<SparseRow>& vecs) {
        EchelonBasis basis;
        for (const auto& v : vecs) basis.ingest(v);
        std::vector<SparseRow> out;
        out.reserve(basis.pivot_rows().size());
        for (const auto& [col, row] : basis.pivot_rows()) out.push_back(row);
        return out;
    };

    std::vector<SparseRow> current = reduce_to_basis(spans.front());
    for (std::size_t i = 1; i < spans.size() && !current.empty(); ++i) {
        std::vector<SparseRow> stacked = current;
        stacked.insert(stacked.end(), spans[i].begin(), spans[i].end());
        const auto kernel = kernel_of_columns(stacked, ambient);
        // each kernel vector's first |current| coordinates combine the
        // current basis into a vector of the intersection
        std::vector<SparseRow> next;
        for (const auto& z : kernel) {
            std::vector<std::pair<int, Rat>> terms;
            for (std::size_t j = 0; j < current.size(); ++j) {
                if (z[j] == 0) continue;
                for (const auto& [c, v] : current[j].terms) terms.emplace_back(c, v * z[j]);
            }
            SparseRow vec = sparse_row(std::move(terms));
            if (!vec.empty()) next.push_back(std::move(vec));
        }
        current = reduce_to_basis(next);
    }
    return static_cast<long>(current.size());
}

} // namespace sturmalg
