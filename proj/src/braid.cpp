#include "cbl/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

namespace cbl {

int BraidWord::exponent_sum() const {
  int e = 0;
  for (int l : letters) e += (l > 0) ? 1 : -1;
  return e;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

Permutation braid_permutation(const BraidWord& w) {
  // track current position of each entering strand; sign is irrelevant
  std::vector<int> pos(w.strands);
  std::iota(pos.begin(), pos.end(), 0);
  std::vector<int> occ = pos;  // occ[p] = strand currently at position p
  for (int l : w.letters) {
    int i = std::abs(l) - 1;
    std::swap(occ[i], occ[i + 1]);
  }
  Permutation p;
  p.images.resize(w.strands);
  for (int q = 0; q < w.strands; ++q) p.images[occ[q]] = q;
  return p;
}

BraidWord parse_word(const std::string& text, std::optional<int> declared_strands) {
  BraidWord w;
  std::vector<int> letters;
  size_t i = 0;
  int max_index = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == ',') {
      ++i;
      continue;
    }
    size_t j = i;
    if (text[j] == '-') ++j;
    size_t digits = 0;
    while (j < text.size() && std::isdigit((unsigned char)text[j])) {
      ++j;
      ++digits;
    }
    std::string tok = text.substr(i, j - i);
    if (digits == 0 || (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != ','))
      throw error("parse error: bad token '" +
                  text.substr(i, std::max(j + 1, i + 1) - i) + "'");
    int v = std::atoi(tok.c_str());
    if (v == 0) throw error("parse error: bad token '0' (letter index must be nonzero)");
    max_index = std::max(max_index, std::abs(v));
    letters.push_back(v);
    i = j;
  }
  if (declared_strands) {
    if (*declared_strands < 1) throw error("parse error: strand count must be >= 1");
    if (max_index >= *declared_strands)
      throw error("parse error: token '" + std::to_string(max_index) +
                  "' out of range for " + std::to_string(*declared_strands) + " strands");
    w.strands = *declared_strands;
  } else {
    w.strands = std::max(1, max_index + 1);
  }
  w.letters = std::move(letters);
  return w;
}

std::string render_word(const BraidWord& w) {
  std::string s;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w.letters[i]);
  }
  return s;
}

std::vector<int> strand_components(const BraidWord& w) {
  Permutation p = braid_permutation(w);
  int n = w.strands;
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    for (int t = s; comp[t] == -1; t = p(t)) comp[t] = next;
    ++next;
  }
  return comp;  // numbered in order of lowest strand by construction
}

LinkFingerprint link_fingerprint(const BraidWord& w) {
  std::vector<int> comp = strand_components(w);
  int mu = comp.empty() ? 1 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<int>> cross(mu, std::vector<int>(mu, 0));
  std::vector<int> occ(w.strands);
  std::iota(occ.begin(), occ.end(), 0);
  int writhe = 0;
  for (int l : w.letters) {
    int i = std::abs(l) - 1;
    int sgn = l > 0 ? 1 : -1;
    writhe += sgn;
    int a = comp[occ[i]], b = comp[occ[i + 1]];
    if (a != b) {
      cross[a][b] += sgn;
      cross[b][a] += sgn;
    }
    std::swap(occ[i], occ[i + 1]);
  }
  LinkFingerprint fp;
  fp.components = mu;
  fp.linking_matrix.assign(mu, std::vector<int>(mu, 0));
  for (int a = 0; a < mu; ++a)
    for (int b = 0; b < mu; ++b) {
      if (a == b) continue;
      if (cross[a][b] % 2 != 0)
        throw error("internal: odd inter-component crossing count");
      fp.linking_matrix[a][b] = cross[a][b] / 2;
    }
  fp.writhe = writhe;
  fp.exponent_sum = writhe;
  fp.strands = w.strands;
  return fp;
}

std::vector<int> pairwise_linking(const LinkFingerprint& fp) {
  std::vector<int> out;
  for (int a = 0; a < fp.components; ++a)
    for (int b = a + 1; b < fp.components; ++b)
      out.push_back(fp.linking_matrix[a][b]);
  return out;
}

bool fingerprint_equivalent(const LinkFingerprint& a, const LinkFingerprint& b) {
  if (a.components != b.components || a.writhe != b.writhe) return false;
  int mu = a.components;
  std::vector<int> perm(mu);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; ok && x < mu; ++x)
      for (int y = 0; ok && y < mu; ++y)
        if (a.linking_matrix[x][y] != b.linking_matrix[perm[x]][perm[y]]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

BraidWord mirror(const BraidWord& w) {
  BraidWord r = w;
  for (int& l : r.letters) l = -l;
  return r;
}

BraidWord reverse(const BraidWord& w) {
  BraidWord r = w;
  std::reverse(r.letters.begin(), r.letters.end());
  return r;
}

BraidWord cyclic_shift(const BraidWord& w, int k) {
  BraidWord r = w;
  if (r.letters.empty()) return r;
  k = ((k % (int)r.letters.size()) + (int)r.letters.size()) % (int)r.letters.size();
  std::rotate(r.letters.begin(), r.letters.begin() + k, r.letters.end());
  return r;
}

BraidWord conjugate(const BraidWord& w, int letter) {
  if (letter == 0 || std::abs(letter) >= w.strands)
    throw error("conjugate: letter out of range");
  BraidWord r = w;
  r.letters.insert(r.letters.begin(), letter);
  r.letters.push_back(-letter);
  return r;
}

BraidWord stabilize(const BraidWord& w, int sign) {
  if (sign != 1 && sign != -1) throw error("stabilize: sign must be +1 or -1");
  BraidWord r = w;
  r.strands = w.strands + 1;
  r.letters.push_back(sign * w.strands);
  return r;
}

BraidWord destabilize(const BraidWord& w) {
  int top = w.strands - 1;
  if (w.strands < 2 || w.letters.empty() || w.letters.back() != top)
    throw error("destabilize: last letter must be +(n-1)");
  for (size_t i = 0; i + 1 < w.letters.size(); ++i)
    if (std::abs(w.letters[i]) == top)
      throw error("destabilize: index n-1 occurs more than once");
  BraidWord r;
  r.strands = w.strands - 1;
  r.letters.assign(w.letters.begin(), w.letters.end() - 1);
  return r;
}

std::vector<int> free_reduce(std::vector<int> letters) {
  std::vector<int> out;
  for (int l : letters) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

std::vector<int> inverse_letters(const std::vector<int>& letters) {
  std::vector<int> out(letters.rbegin(), letters.rend());
  for (int& l : out) l = -l;
  return out;
}

}  // namespace cbl
