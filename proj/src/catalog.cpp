#include "cbl/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cbl/homfly.hpp"
#include "cbl/qp.hpp"
#include "cbl/seifert.hpp"

namespace cbl {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Tri parse_tri(const std::string& s, const std::string& where) {
  if (s == "yes") return Tri::yes;
  if (s == "no") return Tri::no;
  if (s == "?") return Tri::unknown;
  throw error("catalog: bad yes/no/? cell \"" + s + "\" in " + where);
}

std::string tri_str(Tri t) {
  return t == Tri::yes ? "yes" : t == Tri::no ? "no" : "?";
}

bool has_letter(const CatalogRow& r, const std::string& l) {
  return std::find(r.letters.begin(), r.letters.end(), l) != r.letters.end();
}

std::string sign_pattern(const LinkFingerprint& fp,
                         const std::vector<int>& order) {
  std::string out;
  int mu = fp.components;
  for (int a = 0; a < mu; ++a)
    for (int b = a + 1; b < mu; ++b) {
      int v = fp.linking_matrix[order[a]][order[b]];
      out += v > 0 ? '+' : v < 0 ? '-' : '0';
    }
  return out;
}

void validate(const std::vector<CatalogRow>& rows) {
  if (rows.size() != 70)
    throw error("catalog: expected 70 rows, got " + std::to_string(rows.size()));
  std::map<int, int> per_table;
  std::set<std::string> names;
  for (const auto& r : rows) {
    per_table[r.table]++;
    if (!names.insert(r.name).second)
      throw error("catalog: duplicate row name " + r.name);
  }
  if (per_table[1] != 24 || per_table[2] != 23 || per_table[3] != 23)
    throw error("catalog: table sizes must be 24/23/23");
  for (const auto& r : rows) {
    std::string at = "row " + r.name;
    if (r.mirror_of && !find_row(rows, *r.mirror_of))
      throw error("catalog: unresolved mirror reference in " + at);
    if (r.chi_s.has_value() != r.chi_minus.has_value())
      throw error("catalog: chi columns must appear together in " + at);
    if (r.in_sb == Tri::yes && r.in_b != Tri::yes)
      throw error("catalog: SB ⊂ B violated in " + at);
    bool bcd = has_letter(r, "B") || has_letter(r, "C") || has_letter(r, "D");
    if (bcd && r.in_b != Tri::no)
      throw error("catalog: letters B/C/D require B = no in " + at);
    if (bcd && !r.chi_s)
      throw error("catalog: letters B/C/D require chi cells in " + at);
    if (r.chi_s && r.in_sb != Tri::yes && *r.chi_s > *r.chi_minus)
      throw error("catalog: chi ordering violated in " + at);
    if (r.in_q == Tri::yes && (r.in_sb != Tri::yes || r.in_b != Tri::yes))
      throw error("catalog: Q ⊂ SB violated in " + at);
  }
}

}  // namespace

std::optional<const CatalogRow*> find_row(const std::vector<CatalogRow>& rows,
                                          const std::string& name) {
  for (const auto& r : rows)
    if (r.name == name) return &r;
  return std::nullopt;
}

std::vector<CatalogRow> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("catalog: cannot open " + path);
  std::string line;
  if (!std::getline(in, line))
    throw error("catalog: empty file " + path);
  if (split(line, '\t') !=
      std::vector<std::string>{"name", "braid", "lk", "Q", "SB", "B", "chi",
                               "chim", "letters", "table", "refs"})
    throw error("catalog: unexpected header in " + path);

  std::vector<CatalogRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split(line, '\t');
    if (f.size() != 11)
      throw error("catalog: expected 11 cells, got " +
                  std::to_string(f.size()) + " in line: " + line);
    CatalogRow r;
    r.name = f[0];
    if (!f[1].empty()) r.braid = parse_word(f[1]);
    r.lk_signs = f[2];
    r.in_q = parse_tri(f[3], r.name);
    r.in_sb = parse_tri(f[4], r.name);
    r.in_b = parse_tri(f[5], r.name);
    if (!f[6].empty()) r.chi_s = std::stoi(f[6]);
    if (!f[7].empty()) r.chi_minus = std::stoi(f[7]);
    if (!f[8].empty()) r.letters = split(f[8], ',');
    r.table = std::stoi(f[9]);
    r.refs = f[10];
    for (const auto& tok : split(f[10], ';'))
      if (tok.rfind("mirror=", 0) == 0) r.mirror_of = tok.substr(7);
    rows.push_back(std::move(r));
  }
  validate(rows);
  return rows;
}

std::vector<CatalogRow> load_catalog() {
  return load_catalog(std::string(CBL_DATA_DIR) + "/catalog.tsv");
}

int expected_components(const std::string& name) {
  // census base names and their component counts
  static const std::vector<std::pair<std::string, int>> bases = {
      {"L4a1", 2}, {"L6a1", 2}, {"L6a2", 2}, {"L6a3", 2}, {"L6a4", 3},
      {"L6a5", 3}, {"L6n1", 3}, {"I_", 4},   {"Y_", 4},   {"2_1", 2},
      {"3_1", 1},  {"4_1", 1},  {"6_1", 1},  {"6_2", 1},  {"6_3", 1}};
  // split unions add components; each # merges two components into one
  int total = 0;
  std::vector<std::string> parts;
  std::string cur;
  for (size_t i = 0; i < name.size();) {
    // the split-union symbol is the 3-byte UTF-8 sequence for U+2294
    if (name.compare(i, 3, "\xE2\x8A\x94") == 0) {
      parts.push_back(cur);
      cur.clear();
      i += 3;
    } else {
      cur += name[i++];
    }
  }
  parts.push_back(cur);
  for (const auto& part : parts) {
    int sum = 0, pieces = 0;
    for (const auto& piece : split(part, '#')) {
      int c = -1;
      for (const auto& [base, k] : bases)
        if (piece.rfind(base, 0) == 0) {
          c = k;
          break;
        }
      if (c < 0) throw error("catalog: unknown base name in " + name);
      sum += c;
      pieces++;
    }
    total += sum - (pieces - 1);
  }
  return total;
}

std::optional<BraidWord> effective_braid(const CatalogRow& row,
                                         const std::vector<CatalogRow>& rows) {
  if (row.braid) return row.braid;
  if (row.mirror_of) {
    auto m = find_row(rows, *row.mirror_of);
    if (m && (*m)->braid && (*m)->name != row.name) return mirror(*(*m)->braid);
  }
  return std::nullopt;
}

RowReport cross_check_row(const CatalogRow& row,
                          const std::vector<CatalogRow>& rows) {
  RowReport rep;
  rep.name = row.name;
  auto add = [&](const std::string& cell, const std::string& status,
                 const std::string& evidence) {
    rep.cells.push_back({cell, status, evidence});
    if (status == "mismatch") rep.mismatch = true;
  };

  auto wopt = effective_braid(row, rows);
  std::optional<LinkFingerprint> fp;
  if (wopt) fp = link_fingerprint(*wopt);
  std::string braid_src = row.braid ? "tabulated braid" : "mirrored braid";

  // component count
  if (fp) {
    int want = expected_components(row.name);
    if (fp->components == want)
      add("components", "confirmed",
          "closure has " + std::to_string(fp->components) +
              " components (from " + braid_src + ")");
    else
      add("components", "mismatch",
          "closure has " + std::to_string(fp->components) + ", name implies " +
              std::to_string(want));
  } else {
    add("components", "not-checked", "no braid on this row or its mirror");
  }

  // linking sign pattern
  if (!row.lk_signs.empty()) {
    if (!fp) {
      add("lk", "not-checked", "no braid available");
    } else {
      int mu = fp->components;
      std::vector<int> order(mu);
      std::iota(order.begin(), order.end(), 0);
      std::string lex = sign_pattern(*fp, order);
      if (lex == row.lk_signs) {
        add("lk", "confirmed", "recomputed pattern " + lex);
      } else {
        bool found = false;
        std::vector<int> perm = order;
        while (std::next_permutation(perm.begin(), perm.end())) {
          if (sign_pattern(*fp, perm) == row.lk_signs) {
            std::string p;
            for (int x : perm) p += std::to_string(x);
            add("lk", "confirmed",
                "recomputed pattern " + lex + " matches under component order (" +
                    p + ")");
            found = true;
            break;
          }
        }
        if (!found)
          add("lk", "mismatch",
              "recomputed pattern " + lex + " vs tabulated " + row.lk_signs);
      }
    }
  }

  // quasipositivity column
  if (!fp) {
    add("Q", "not-checked", "no braid available");
  } else if (row.in_q == Tri::yes) {
    auto qp = find_qp_factorization(*wopt, 4);
    if (qp)
      add("Q", "confirmed",
          "quasipositive factorization with " +
              std::to_string(qp->factors.size()) + " bands found at budget 4");
    else
      add("Q", "consistent",
          "budget-4 band search found nothing; the search is incomplete, so "
          "this does not contradict Q = yes");
  } else {
    int cap = chi_upper(*wopt, ChiTarget::chi_s);
    if (qp_obstruction(*wopt, cap) == Obstruction::obstructed) {
      add("Q", "confirmed",
          "polynomial lower-degree obstruction fires against chi_s <= " +
              std::to_string(cap));
    } else if (row.chi_s &&
               qp_obstruction(*wopt, *row.chi_s) == Obstruction::obstructed) {
      add("Q", "consistent",
          "obstruction fires against the tabulated chi_s = " +
              std::to_string(*row.chi_s));
    } else {
      add("Q", "consistent", "no obstruction found; Q = no not contradicted");
    }
  }

  // justification letters
  std::optional<MirrorClass> mc;
  if (row.mirror_of) {
    auto m = find_row(rows, *row.mirror_of);
    if (m) mc = MirrorClass{(*m)->in_b, (*m)->in_sb};
  }
  ChiBounds printed;
  if (row.chi_s) printed.chi_s_upper = row.chi_s;
  if (row.chi_minus) printed.chi_minus_lower = row.chi_minus;
  for (const auto& l : row.letters) {
    if (l == "B") {
      if (fp && row.chi_s) {
        auto got = classify(printed, *fp, mc);
        if (got.count("not_SB") && got.count("not_B"))
          add("letter B", "confirmed",
              "classify derives not_SB and not_B from the tabulated chi gap");
        else
          add("letter B", "mismatch",
              "classify does not derive not_SB/not_B from the tabulated chi");
      } else {
        add("letter B", "not-checked", "braid or chi cells missing");
      }
    } else if (l == "C") {
      if (fp && mc) {
        auto got = classify(printed, *fp, mc);
        if (got.count("not_B via Prop 3.3"))
          add("letter C", "confirmed",
              "classify derives not_B from mirror row " + *row.mirror_of +
                  " (SB = " + tri_str(mc->in_sb) + ")");
        else
          add("letter C", "mismatch",
              "classify does not derive not_B from the mirror row");
      } else {
        add("letter C", "not-checked", "braid or mirror row missing");
      }
    } else {
      add("letter " + l, "not-checked",
          "justification outside the recomputation scope");
    }
  }

  // chi bracket: any tabulated value must sit between a certified lower
  // bound (the closure surface) and the certified upper bound
  if (row.chi_s && wopt) {
    int mu = fp->components;
    int lower = wopt->strands - (int)wopt->letters.size();
    int up_s = chi_upper(*wopt, ChiTarget::chi_s);
    int up_m = chi_upper(*wopt, ChiTarget::chi_minus);
    bool ok = lower <= *row.chi_s && *row.chi_s <= up_s &&
              lower <= *row.chi_minus && *row.chi_minus <= up_m &&
              (*row.chi_s - mu) % 2 == 0 && (*row.chi_minus - mu) % 2 == 0;
    std::string ev = "certified " + std::to_string(lower) +
                     " <= chi_s <= " + std::to_string(up_s) + ", " +
                     std::to_string(lower) +
                     " <= chi_minus <= " + std::to_string(up_m);
    add("chi", ok ? "consistent" : "mismatch", ev);
    if (row.in_sb == Tri::yes)
      rep.anomalies.push_back(
          "chi cells printed on an SB = yes row; bracket-checked only");
  } else if (row.chi_s) {
    add("chi", "not-checked", "no braid available");
  }

  return rep;
}

}  // namespace cbl
