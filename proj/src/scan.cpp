#include "mrap/scan.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "mrap/oracle.hpp"

namespace mrap {

namespace {

constexpr const char* kOmegaNote =
    "a = sqrt(D), or (1+sqrt(D))/2 when D = 1 mod 4";

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

bool is_squarefree(long n) {
  if (n == 0) return false;
  mpz_class a = n < 0 ? -n : n;
  return squarefree_decompose(a).second == 1;
}

long mod4(long n) { return ((n % 4) + 4) % 4; }

std::string scan_key(long a, long b, long c, long d, long D) {
  std::ostringstream os;
  os << a << "," << b << "," << c << "," << d << "," << D;
  return os.str();
}

// (first.u, diff.u) pairs when every triple is rational; nullopt otherwise.
std::optional<std::vector<std::pair<mpz_class, mpz_class>>> rational_shape(
    const std::vector<APTriple>& triples) {
  std::vector<std::pair<mpz_class, mpz_class>> out;
  for (const auto& t : triples) {
    if (t.first.v != 0 || t.diff.v != 0) return std::nullopt;
    out.emplace_back(t.first.u, t.diff.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool equals_rational_set(const std::vector<APTriple>& got,
                         const std::vector<APTriple>& rational) {
  auto g = rational_shape(got);
  if (!g) return false;
  auto r = rational_shape(rational);
  return g == r;
}

nlohmann::json row_to_json(const ScanRow& row) {
  return nlohmann::json{{"a", row.a},
                        {"b", row.b},
                        {"c", row.c},
                        {"d", row.d},
                        {"D", row.D},
                        {"disc", row.disc},
                        {"count", row.count},
                        {"equals_rational", row.equals_rational},
                        {"triples", row.triples}};
}

ScanRow row_from_json(const nlohmann::json& j) {
  ScanRow row;
  row.a = j.at("a").get<long>();
  row.b = j.at("b").get<long>();
  row.c = j.at("c").get<long>();
  row.d = j.at("d").get<long>();
  row.D = j.at("D").get<long>();
  row.disc = j.at("disc").get<long>();
  row.count = j.at("count").get<long>();
  row.equals_rational = j.at("equals_rational").get<bool>();
  row.triples = j.at("triples").get<std::vector<std::string>>();
  return row;
}

}  // namespace

std::string row_csv(const ScanRow& row) {
  std::ostringstream os;
  os << row.a << "," << row.b << "," << row.c << "," << row.d << "," << row.D
     << "," << row.disc << "," << row.count << ",";
  if (row.equals_rational) {
    os << "=Q";
  } else {
    for (std::size_t i = 0; i < row.triples.size(); ++i) {
      if (i) os << ";";
      os << row.triples[i];
    }
  }
  return os.str();
}

std::uint64_t row_digest(const ScanRow& row) { return fnv1a64(row_csv(row)); }

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    Entry e{row_from_json(j.at("row")), j.at("digest").get<std::uint64_t>()};
    entries_[j.at("key").get<std::string>()] = std::move(e);
  }
}

const ScanRow* ResultCache::lookup(const std::string& key,
                                   std::uint64_t* digest) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return nullptr;
  if (digest) *digest = it->second.digest;
  return &it->second.row;
}

void ResultCache::append(const std::string& key, const ScanRow& row,
                         std::uint64_t digest) {
  entries_[key] = Entry{row, digest};
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cache journal not writable: " + path_);
  nlohmann::json j{{"key", key}, {"digest", digest}, {"row", row_to_json(row)}};
  out << j.dump() << "\n";
}

std::vector<long> fields_in_disc_range(long disc_min, long disc_max) {
  std::vector<long> out;
  for (long disc = disc_min; disc <= disc_max; ++disc) {
    if (disc == 0 || disc == 1 || disc == -1) continue;
    if (mod4(disc) == 1) {
      if (is_squarefree(disc)) out.push_back(disc);
    } else if (disc % 4 == 0) {
      long m = disc / 4;
      if (is_squarefree(m) && (mod4(m) == 2 || mod4(m) == 3)) out.push_back(m);
    }
  }
  return out;
}

ScanResult scan(const ScanSpec& spec) {
  if (spec.d_min > spec.d_max || spec.d_min < 1)
    throw std::invalid_argument("scan: d range must be nonempty and positive");
  std::vector<long> ds;
  if (!spec.d_list_explicit.empty()) {
    for (long D : spec.d_list_explicit) {
      FieldDesc F = mk_field(D);
      ds.push_back(F.is_rational() ? 1 : F.D);
    }
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  } else {
    ds = fields_in_disc_range(spec.disc_min, spec.disc_max);
  }
  if (ds.empty()) throw std::invalid_argument("scan: empty field range");

  std::optional<ResultCache> cache;
  if (!spec.cache_path.empty()) cache.emplace(spec.cache_path);

  ScanResult result;
  FieldDesc Q = mk_rational_field();
  // Rational baselines, shared across fields.
  std::map<long, std::vector<APTriple>> rational_sets;
  for (long d = spec.d_min; d <= spec.d_max; ++d)
    rational_sets[d] =
        solve_ap(make_instance(Q, spec.a, spec.b, spec.c, d)).triples;

  std::map<std::pair<long, long>, ScanRow> rows;
  for (long D : ds) {
    FieldDesc F = D == 1 ? Q : mk_field(D);
    std::optional<SolutionFamily> fam;
    try {
      fam = build_family(F, AlgInt::from_long(F, spec.a),
                         AlgInt::from_long(F, spec.b),
                         AlgInt::from_long(F, spec.c));
    } catch (const DegenerateError&) {
      // handled per d below via solve_ap's oracle fallback
    }
    for (long d = spec.d_min; d <= spec.d_max; ++d) {
      std::string key = scan_key(spec.a, spec.b, spec.c, d, D);
      if (cache) {
        std::uint64_t digest = 0;
        if (const ScanRow* hit = cache->lookup(key, &digest)) {
          ++result.cache_hits;
          rows[{d, D}] = *hit;
          continue;
        }
      }
      SolutionReport rep =
          fam ? solve_with_family(*fam, AlgInt::from_long(F, d))
              : solve_ap(make_instance(F, spec.a, spec.b, spec.c, d));
      ScanRow row;
      row.a = spec.a;
      row.b = spec.b;
      row.c = spec.c;
      row.d = d;
      row.D = F.D;
      row.disc = F.disc;
      row.count = static_cast<long>(rep.triples.size());
      if (spec.mode == ScanMode::Exists) {
        bool nontrivial = false;
        for (const auto& t : rep.triples)
          if (!t.is_trivial()) nontrivial = true;
        row.count = nontrivial ? 1 : 0;
      } else {
        row.equals_rational =
            F.is_quadratic() &&
            equals_rational_set(rep.triples, rational_sets.at(d));
        if (!row.equals_rational)
          for (const auto& t : rep.triples) row.triples.push_back(t.str());
      }
      if (cache) cache->append(key, row, row_digest(row));
      rows[{d, D}] = std::move(row);
    }
  }
  for (auto& [key, row] : rows) result.rows.push_back(std::move(row));

  if (!spec.out_path.empty()) {
    std::ofstream out(spec.out_path);
    if (!out) throw std::runtime_error("cannot open " + spec.out_path);
    write_report(result, spec, out);
  }
  return result;
}

void write_report(const ScanResult& result, const ScanSpec& spec,
                  std::ostream& os) {
  if (spec.format == ReportFormat::CSV) {
    os << "# omega convention: " << kOmegaNote << "\n";
    os << "a,b,c,d,D,disc,count,triples\n";
    for (const auto& row : result.rows) os << row_csv(row) << "\n";
  } else {
    nlohmann::json j;
    j["omega_convention"] = kOmegaNote;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : result.rows) j["rows"].push_back(row_to_json(row));
    os << j.dump(2) << "\n";
  }
}

ShortlistResult imaginary_shortlist(long a, long b, long c) {
  ShortlistResult out;
  std::map<long, std::vector<long>> by_field;  // D -> candidate d values
  for (long D = -1; D >= -400; --D) {
    if (!is_squarefree(D)) continue;
    long bound = mod4(D) == 1 ? 400 : 100;
    if (-D > bound) continue;
    FieldDesc F = mk_field(D);
    SolutionFamily fam =
        build_family(F, AlgInt::from_long(F, a), AlgInt::from_long(F, b),
                     AlgInt::from_long(F, c));
    std::vector<long> cand;
    for (const auto& fc : fam.candidates) {
      mpq_class n = norm(fc.w);
      if (n.get_den() != 1) continue;
      mpz_class num = abs(n.get_num());
      if (num == 0) continue;
      mpz_class s = squarefree_decompose(num).second;
      for (const mpz_class& t : positive_divisors(s))
        if (t.fits_slong_p()) cand.push_back(t.get_si());
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (long d : cand) out.candidates.emplace_back(d, D);
    if (!cand.empty()) by_field[D] = std::move(cand);
  }
  std::sort(out.candidates.begin(), out.candidates.end());

  FieldDesc Q = mk_rational_field();
  std::map<long, std::vector<APTriple>> rational_sets;
  for (const auto& [D, cand] : by_field) {
    FieldDesc F = mk_field(D);
    SolutionFamily fam =
        build_family(F, AlgInt::from_long(F, a), AlgInt::from_long(F, b),
                     AlgInt::from_long(F, c));
    for (long d : cand) {
      auto it = rational_sets.find(d);
      if (it == rational_sets.end())
        it = rational_sets
                 .emplace(d, solve_ap(make_instance(Q, a, b, c, d)).triples)
                 .first;
      SolutionReport rep = solve_with_family(fam, AlgInt::from_long(F, d));
      if (!equals_rational_set(rep.triples, it->second))
        out.filtered.emplace_back(d, D);
    }
  }
  std::sort(out.filtered.begin(), out.filtered.end());
  return out;
}

VerifyReport verify_paper() {
  VerifyReport rep;
  rep.expected_total = reference_total();
  FieldDesc Q = mk_rational_field();

  auto same = [](const std::vector<APTriple>& got,
                 const std::vector<APTriple>& want) {
    if (got.size() != want.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
      if (!(got[i] == want[i])) return false;
    return true;
  };
  auto describe = [](const std::vector<APTriple>& v) {
    std::string s;
    for (const auto& t : v) {
      if (!s.empty()) s += ";";
      s += t.str();
    }
    return s;
  };

  for (long d = 1; d <= 20; ++d) {
    auto want = rational_reference(Q, d);
    std::sort(want.begin(), want.end(), triple_less);
    auto got = solve_ap(make_instance(Q, 1, 1, 1, d)).triples;
    std::ostringstream line;
    line << "Q d=" << d << ": ";
    if (same(got, want)) {
      line << "ok (" << got.size() << " triples)";
    } else {
      rep.pass = false;
      line << "MISMATCH got {" << describe(got) << "} want {" << describe(want)
           << "}";
    }
    rep.lines.push_back(line.str());
  }

  for (const auto& row : reference_rows()) {
    FieldDesc F = mk_field(row.D);
    auto want = reference_row_triples(row);
    auto got = solve_ap(make_instance(F, 1, 1, 1, row.d)).triples;
    rep.computed_total += static_cast<long>(got.size());
    std::ostringstream line;
    line << "d=" << row.d << " D=" << row.D << ": ";
    bool ok = same(got, want) && static_cast<long>(got.size()) == row.count;
    if (ok) {
      line << "ok (" << got.size() << " triples)";
    } else {
      rep.pass = false;
      line << "MISMATCH count=" << got.size() << " want " << row.count
           << " got {" << describe(got) << "} want {" << describe(want) << "}";
    }
    rep.lines.push_back(line.str());
  }

  {
    std::ostringstream line;
    line << "total: computed=" << rep.computed_total << " expected="
         << rep.expected_total;
    if (rep.computed_total != rep.expected_total) {
      rep.pass = false;
      line << " MISMATCH";
    }
    rep.lines.push_back(line.str());
  }
  return rep;
}

}  // namespace mrap
