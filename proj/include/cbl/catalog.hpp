#ifndef CBL_CATALOG_HPP
#define CBL_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "cbl/braid.hpp"
#include "cbl/slice.hpp"

namespace cbl {

// one row of the bundled census; empty TSV cells become nullopt / empty
struct CatalogRow {
  std::string name;
  std::optional<BraidWord> braid;
  std::string lk_signs;  // one char per component pair in lex order: + - 0
  Tri in_q = Tri::unknown;
  Tri in_sb = Tri::unknown;
  Tri in_b = Tri::unknown;
  std::optional<int> chi_s;
  std::optional<int> chi_minus;
  std::vector<std::string> letters;  // justification tags A..F
  int table = 0;
  std::string refs;                       // raw refs cell
  std::optional<std::string> mirror_of;   // parsed from refs
};

// loads and validates the bundled census (or an explicit file); throws
// cbl::error on malformed data or broken invariants
std::vector<CatalogRow> load_catalog();
std::vector<CatalogRow> load_catalog(const std::string& path);

std::optional<const CatalogRow*> find_row(const std::vector<CatalogRow>& rows,
                                          const std::string& name);

// component count implied by the row name (split unions add, connected
// sums merge one component per #)
int expected_components(const std::string& name);

// braid usable for recomputation: the row's own braid, or the mirror of the
// mirror row's braid when only that side is tabulated
std::optional<BraidWord> effective_braid(const CatalogRow& row,
                                         const std::vector<CatalogRow>& rows);

struct CellCheck {
  std::string cell;      // which table cell was examined
  std::string status;    // confirmed | consistent | not-checked | mismatch
  std::string evidence;  // one-line trail
};

struct RowReport {
  std::string name;
  std::vector<CellCheck> cells;
  bool mismatch = false;
  std::vector<std::string> anomalies;
};

RowReport cross_check_row(const CatalogRow& row,
                          const std::vector<CatalogRow>& rows);

}  // namespace cbl

#endif
