#pragma once

#include "sturmalg/numeric.hpp"

#include <map>
#include <vector>

namespace sturmalg {

/// Sparse row over integer-indexed columns, terms sorted by column.
struct SparseRow {
    std::vector<std::pair<int, Rat>> terms;

    bool empty() const { return terms.empty(); }
    int leading_col() const { return terms.front().first; }
    const Rat& leading_coeff() const { return terms.front().second; }

    void sort_and_combine();
    /// Clears denominators and common content; leading coefficient positive.
    void make_primitive();
};

SparseRow sparse_row(std::vector<std::pair<int, Rat>> terms);

/// Maintained echelon basis with incremental row ingestion. Rows are kept
/// primitive and eliminations are integer cross-multiplications, so no
/// fractions appear in stored state. Columns at or beyond the pivot limit
/// never become pivots; a row whose support ends up entirely in that zone is
/// returned to the caller instead of being inserted (used for kernel
/// extraction via an identity augment).
class EchelonBasis {
public:
    explicit EchelonBasis(int pivot_limit = -1) : pivot_limit_(pivot_limit) {}

    /// Reduces r against the basis. Returns true if the row extended the
    /// basis; a nonzero fully reduced row confined to the augment zone is
    /// appended to `residuals` when that pointer is given.
    bool ingest(SparseRow r, std::vector<SparseRow>* residuals = nullptr);

    /// Ingests every pivot row of another basis. The resulting rank does not
    /// depend on merge order.
    void merge(const EchelonBasis& other);

    long rank() const { return static_cast<long>(pivots_.size()); }
    const std::map<int, SparseRow>& pivot_rows() const { return pivots_; }

private:
    bool in_pivot_zone(int col) const { return pivot_limit_ < 0 || col < pivot_limit_; }

    int pivot_limit_;
    std::map<int, SparseRow> pivots_;
};

long rank_of_rows(const std::vector<SparseRow>& rows);

/// Kernel of the linear map z -> sum_j z_j * cols[j]. Each column is a
/// sparse vector over [0, ambient); returns dense coefficient vectors of
/// length cols.size().
std::vector<std::vector<Rat>> kernel_of_columns(const std::vector<SparseRow>& cols,
                                                int ambient);

/// Dimension of the intersection of the column spans, all columns living in
/// the same ambient coordinate space.
long intersect_column_spans(const std::vector<std::vector<SparseRow>>& spans, int ambient);

} // namespace sturmalg
