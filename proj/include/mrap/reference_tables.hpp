#pragma once

#include "mrap/solver.hpp"

namespace mrap {

// One published table row for x^2 + y^2 + z^2 = d x y z over Q(sqrt(D)):
// the non-rational triples as (first, diff) pairs in the published
// alpha-coordinates, plus the published total count (rational triples and
// (0,0,0) included).
struct ReferenceEntry {
  long first_c, first_a;  // first = first_c + first_a * alpha
  long diff_c, diff_a;
};

struct ReferenceRow {
  long d;
  long D;
  long count;
  std::vector<ReferenceEntry> entries;
};

const std::vector<ReferenceRow>& reference_rows();

// Expected sum of all published per-row counts.
long reference_total();

// AP_{(1,1,1,d)}(Q) as (first, diff) pairs; {(0,0,0)} except d = 1, 3.
std::vector<APTriple> rational_reference(const FieldDesc& F, long d);

// Published row as a full expected triple set over Q(sqrt(D)): the
// converted quadratic entries plus the rational triples.  The published
// alpha for D = 1 (mod 4) is resolved per row by checking every entry
// against the equation (alpha = omega or omega - 1); throws if no
// consistent convention exists.
std::vector<APTriple> reference_row_triples(const ReferenceRow& row);

}  // namespace mrap
