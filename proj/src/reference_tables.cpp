#include "mrap/reference_tables.hpp"

#include <algorithm>
#include <stdexcept>

namespace mrap {

const std::vector<ReferenceRow>& reference_rows() {
  // Entries are (first, diff) in the published alpha-coordinates:
  // {first_c, first_a, diff_c, diff_a} means (first_c + first_a*alpha,
  // diff_c + diff_a*alpha).
  static const std::vector<ReferenceRow> rows = {
      {1, -1, 16,
       {{2, 1, -3, 1},
        {2, -1, 0, 1},
        {-1, 2, 0, -2},
        {2, 1, 0, -1},
        {2, -4, 0, 2},
        {-4, -3, 3, 1},
        {-1, -2, 0, 2},
        {2, 4, 0, -2},
        {2, 0, 0, 2},
        {2, 0, 0, -2},
        {-4, 3, 3, -1},
        {2, -1, -3, -1}}},
      {1, 2, 12,
       {{8, 4, 0, -4},
        {-13, 11, -6, -23},
        {8, -4, 0, 4},
        {-7, -7, 0, 7},
        {-13, -11, -6, 23},
        {-25, -35, 6, 23},
        {-25, 35, 6, -23},
        {-7, 7, 0, -7}}},
      {1, 3, 6, {{18, 9, 0, -9}, {18, -9, 0, 9}}},
      {1, 5, 26,
       {{-5, -35, 11, 22},
        {-11, 22, -11, -22},
        {-6, -7, 5, 4},
        {8, -9, 11, 22},
        {30, 35, -11, -22},
        {-9, -7, 7, 2},
        {4, 1, 2, -5},
        {5, -3, -7, -2},
        {3, -1, -1, 4},
        {1, 7, 1, -4},
        {3, -1, 7, 5},
        {-3, 14, -2, -10},
        {-17, -14, 8, 10},
        {17, 9, -11, -22},
        {-33, -22, 11, 22},
        {8, 3, -5, 2},
        {-2, 7, 5, -2},
        {8, -9, -2, 5},
        {17, 9, -7, -5},
        {-1, 6, -8, -10},
        {-7, -6, 2, 10},
        {4, 1, -5, -4}}},
      {1, 6, 8,
       {{-12, -6, 0, 6}, {-12, 6, 0, -6}, {-3, 3, 0, -3}, {-3, -3, 0, 3}}},
      {1, 11, 8,
       {{-4, -2, -6, 4}, {-16, 6, 6, -4}, {-16, -6, 6, 4}, {-4, 2, -6, -4}}},
      {1, 14, 6, {{-4, -2, 0, 2}, {-4, 2, 0, -2}}},
      {1, 17, 8,
       {{13, 4, -10, 1}, {9, -4, -11, -1}, {-7, 6, 10, -1}, {-13, -6, 11, 1}}},
      {1, 21, 8,
       {{-3, 3, 9, 0}, {12, -3, -9, 0}, {-6, -3, 9, 0}, {15, 3, -9, 0}}},
      {1, 29, 12,
       {{-32, -11, 14, 7},
        {-21, 11, 7, -7},
        {-4, 3, 5, -2},
        {-7, -3, 7, 2},
        {7, 1, -7, -2},
        {-7, -3, -7, 7},
        {6, -1, -5, 2},
        {-4, 3, -14, -7}}},
      {1, 41, 12,
       {{15, -4, -10, 1},
        {-3, 2, 4, -1},
        {5, 0, -5, -1},
        {-3, 2, 11, 1},
        {-5, -2, 5, 1},
        {5, 0, -4, 1},
        {19, 4, -11, -1},
        {-5, -2, 10, -1}}},
      {2, -1, 5, {{1, 0, 0, -1}, {1, 2, 0, -1}, {1, 0, 0, 1}, {1, -2, 0, 1}}},
      {2, 2, 3, {{4, -2, 0, 2}, {4, 2, 0, -2}}},
      {2, 6, 3, {{-6, 3, 0, -3}, {-6, -3, 0, 3}}},
      {2, 11, 5,
       {{-8, -3, 3, 2}, {-8, 3, 3, -2}, {-2, 1, -3, -2}, {-2, -1, -3, 2}}},
      {2, 14, 3, {{-2, -1, 0, 1}, {-2, 1, 0, -1}}},
      {3, 3, 6, {{6, 3, 0, -3}, {6, -3, 0, 3}}},
      {3, 6, 8,
       {{-1, 1, 0, -1}, {-4, -2, 0, 2}, {-1, -1, 0, 1}, {-4, 2, 0, -2}}},
      {3, 21, 8,
       {{5, 1, -3, 0}, {-1, 1, 3, 0}, {4, -1, -3, 0}, {-2, -1, 3, 0}}},
      {4, 2, 3, {{2, 1, 0, -1}, {2, -1, 0, 1}}},
      {6, 6, 3, {{-2, -1, 0, 1}, {-2, 1, 0, -1}}},
      {7, 2, 3, {{-1, 1, 0, -1}, {-1, -1, 0, 1}}},
      {9, 3, 3, {{2, 1, 0, -1}, {2, -1, 0, 1}}},
      {11, 5, 3, {{-3, -2, 1, 2}, {-1, 2, -1, -2}}},
  };
  return rows;
}

long reference_total() {
  long total = 0;
  for (const auto& row : reference_rows()) total += row.count;
  return total;
}

std::vector<APTriple> rational_reference(const FieldDesc& F, long d) {
  auto mk = [&](long f, long g) {
    return APTriple{AlgInt::from_long(F, f), AlgInt::from_long(F, g)};
  };
  std::vector<APTriple> out = {mk(0, 0)};
  if (d == 1) {
    out.push_back(mk(3, 0));
    out.push_back(mk(-15, 9));
    out.push_back(mk(3, -9));
  } else if (d == 3) {
    out.push_back(mk(1, 0));
    out.push_back(mk(-5, 3));
    out.push_back(mk(1, -3));
  }
  return out;
}

namespace {

// alpha = omega + shift, shift in {0, -1}.
APTriple convert_entry(const FieldDesc& F, const ReferenceEntry& e,
                       long shift) {
  return APTriple{AlgInt(F, e.first_c + shift * e.first_a, e.first_a),
                  AlgInt(F, e.diff_c + shift * e.diff_a, e.diff_a)};
}

bool row_verifies(const MRInstance& inst, const ReferenceRow& row,
                  long shift) {
  for (const auto& e : row.entries)
    if (!verify_triple(inst, convert_entry(inst.F, e, shift))) return false;
  return true;
}

}  // namespace

std::vector<APTriple> reference_row_triples(const ReferenceRow& row) {
  FieldDesc F = mk_field(row.D);
  MRInstance inst = make_instance(F, 1, 1, 1, row.d);
  long shift = 0;
  if (F.half_omega) {
    bool plain = row_verifies(inst, row, 0);
    bool shifted = row_verifies(inst, row, -1);
    if (plain == shifted)
      throw std::runtime_error(
          "reference_row_triples: ambiguous alpha convention for D=" +
          std::to_string(row.D));
    shift = shifted ? -1 : 0;
  } else if (!row_verifies(inst, row, 0)) {
    throw std::runtime_error("reference_row_triples: row fails for D=" +
                             std::to_string(row.D));
  }
  std::vector<APTriple> out = rational_reference(F, row.d);
  for (const auto& e : row.entries)
    out.push_back(convert_entry(F, e, shift));
  std::sort(out.begin(), out.end(), triple_less);
  return out;
}

}  // namespace mrap
