#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cbl/braid.hpp"
#include "cbl/catalog.hpp"
#include "cbl/cert.hpp"
#include "cbl/homfly.hpp"
#include "cbl/laurent.hpp"
#include "cbl/qp.hpp"
#include "cbl/seifert.hpp"
#include "cbl/slice.hpp"

namespace {

int usage() {
  std::cerr
      << "usage: cbl <verb> [args]\n"
         "  info \"word\"                    components, writhe, linking\n"
         "  homfly \"word\"                  polynomial in the frozen rendering\n"
         "  signature \"word\"               signature of the closure\n"
         "  bounds \"word\"                  certified chi upper bounds\n"
         "  cert-verify <file>             verify a certificate\n"
         "  cert-gen <kind> \"word\" <file>  kinds: split_mirror,\n"
         "                                 connected_mirror, mixed_monoid:k\n"
         "  catalog-check [--verbose]      cross-check the bundled census\n"
         "flags: --verbose adds evidence lines; words are quoted integer\n"
         "tokens, e.g. \"1 1 2 -1\"\n";
  return 2;
}

std::string lk_row(const cbl::LinkFingerprint& fp) {
  std::ostringstream ss;
  std::vector<int> pw = cbl::pairwise_linking(fp);
  for (size_t i = 0; i < pw.size(); ++i) ss << (i ? "," : "") << pw[i];
  return ss.str();
}

int cmd_info(const cbl::BraidWord& w, bool verbose) {
  cbl::LinkFingerprint fp = cbl::link_fingerprint(w);
  std::cout << "components=" << fp.components << " writhe=" << fp.writhe
            << " exponent=" << fp.exponent_sum << " strands=" << fp.strands;
  if (fp.components > 1) std::cout << " linking=" << lk_row(fp);
  std::cout << "\n";
  if (verbose) {
    for (const auto& row : fp.linking_matrix) {
      std::cout << "lk:";
      for (int x : row) std::cout << " " << x;
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_bounds(const cbl::BraidWord& w, bool verbose) {
  std::vector<std::string> prov_s, prov_m;
  int us = cbl::chi_upper(w, cbl::ChiTarget::chi_s, &prov_s);
  int um = cbl::chi_upper(w, cbl::ChiTarget::chi_minus, &prov_m);
  std::cout << "chi_s_upper=" << us << "\n";
  if (verbose)
    for (const std::string& p : prov_s) std::cout << "  " << p << "\n";
  std::cout << "chi_minus_upper=" << um << "\n";
  if (verbose)
    for (const std::string& p : prov_m) std::cout << "  " << p << "\n";
  return 0;
}

int cmd_cert_verify(const std::string& path, bool verbose) {
  std::ifstream in(path);
  if (!in.good()) {
    std::cerr << "cannot read " << path << "\n";
    return 2;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  cbl::Certificate c;
  try {
    c = cbl::parse_certificate(ss.str());
  } catch (const cbl::error& e) {
    std::cout << "REJECTED " << e.what() << "\n";
    return 1;
  }
  cbl::VerifyResult v = cbl::verify_certificate(c);
  if (v.accepted) {
    cbl::LinkFingerprint fp = cbl::link_fingerprint(c.result);
    std::cout << "ACCEPTED strong=" << v.strong
              << " result=mu:" << fp.components;
    if (fp.components > 1) std::cout << ",lk:" << lk_row(fp);
    std::cout << "\n";
  } else {
    std::string why = "rejected";
    for (const std::string& line : v.report)
      if (line.rfind("rejected: ", 0) == 0) why = line.substr(10);
    std::cout << "REJECTED " << why << "\n";
  }
  if (verbose)
    for (const std::string& line : v.report) std::cout << "  " << line << "\n";
  return v.accepted ? 0 : 1;
}

int cmd_cert_gen(const std::string& kind_arg, const cbl::BraidWord& beta,
                 const std::string& out) {
  cbl::ExampleKind kind;
  int k = 0;
  if (kind_arg == "split_mirror") {
    kind = cbl::ExampleKind::split_mirror;
  } else if (kind_arg == "connected_mirror") {
    kind = cbl::ExampleKind::connected_mirror;
  } else if (kind_arg.rfind("mixed_monoid:", 0) == 0) {
    kind = cbl::ExampleKind::mixed_monoid;
    k = std::stoi(kind_arg.substr(13));
  } else {
    return usage();
  }
  cbl::BandFactorization qp;
  if (kind != cbl::ExampleKind::mixed_monoid) {
    auto found = cbl::find_qp_factorization(beta, 4);
    if (!found) {
      std::cerr << "no quasipositive factorization found within budget\n";
      return 1;
    }
    qp = *found;
  }
  cbl::Certificate c;
  try {
    c = cbl::generate_example_cert(kind, beta, qp, k);
  } catch (const cbl::error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  std::ofstream os(out);
  if (!os.good()) {
    std::cerr << "cannot write " << out << "\n";
    return 2;
  }
  os << cbl::render_certificate(c);
  std::cout << "wrote " << out << "\n";
  return 0;
}

int cmd_catalog_check(bool verbose) {
  std::vector<cbl::CatalogRow> rows;
  try {
    rows = cbl::load_catalog();
  } catch (const cbl::error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  int mismatches = 0;
  for (const cbl::CatalogRow& row : rows) {
    cbl::RowReport rep = cbl::cross_check_row(row, rows);
    int confirmed = 0, consistent = 0, unchecked = 0;
    for (const cbl::CellCheck& cell : rep.cells) {
      if (cell.status == "confirmed") ++confirmed;
      else if (cell.status == "consistent") ++consistent;
      else if (cell.status == "not-checked") ++unchecked;
    }
    std::cout << rep.name << ": "
              << (rep.mismatch ? "MISMATCH" : "ok") << " confirmed="
              << confirmed << " consistent=" << consistent
              << " not-checked=" << unchecked << "\n";
    if (rep.mismatch) ++mismatches;
    if (verbose)
      for (const cbl::CellCheck& cell : rep.cells)
        std::cout << "  " << cell.cell << ": " << cell.status << " ("
                  << cell.evidence << ")\n";
  }
  std::cout << rows.size() << " rows, " << mismatches << " mismatches\n";
  return mismatches ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  bool verbose = false;
  for (auto it = args.begin(); it != args.end();) {
    if (*it == "--verbose" || *it == "--all") {
      verbose = verbose || *it == "--verbose";
      it = args.erase(it);
    } else {
      ++it;
    }
  }
  if (args.empty()) return usage();
  std::string verb = args[0];

  try {
    if (verb == "info" || verb == "homfly" || verb == "signature" ||
        verb == "bounds") {
      if (args.size() != 2) return usage();
      cbl::BraidWord w = cbl::parse_word(args[1]);
      if (verb == "info") return cmd_info(w, verbose);
      if (verb == "homfly") {
        std::cout << cbl::render_poly(cbl::homfly_poly(w)) << "\n";
        return 0;
      }
      if (verb == "signature") {
        std::cout << cbl::signature(w) << "\n";
        return 0;
      }
      return cmd_bounds(w, verbose);
    }
    if (verb == "cert-verify") {
      if (args.size() != 2) return usage();
      return cmd_cert_verify(args[1], verbose);
    }
    if (verb == "cert-gen") {
      if (args.size() != 4) return usage();
      return cmd_cert_gen(args[1], cbl::parse_word(args[2]), args[3]);
    }
    if (verb == "catalog-check") {
      if (args.size() != 1) return usage();
      return cmd_catalog_check(verbose);
    }
  } catch (const cbl::error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return usage();
}
