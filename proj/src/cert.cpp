#include "cbl/cert.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "cbl/homfly.hpp"
#include "cbl/seifert.hpp"

namespace cbl {

namespace {

std::vector<int> gen_letters(const BandedWord& w) {
  std::vector<int> out;
  for (const Item& it : w.items)
    if (!it.is_band) out.push_back(it.letter);
  return out;
}

void validate_banded(const BandedWord& w) {
  if (w.strands < 1) throw error("banded word: strands must be >= 1");
  std::set<int> ids;
  for (const Item& it : w.items) {
    if (it.is_band) {
      if (it.lo < 1 || it.hi > w.strands || it.lo >= it.hi)
        throw error("banded word: band B" + std::to_string(it.id) +
                    " attaches outside the strand range");
      if (it.posmono && it.hi != it.lo + 1)
        throw error("banded word: positive monotone band B" +
                    std::to_string(it.id) + " must join adjacent strands");
      if (!ids.insert(it.id).second)
        throw error("banded word: duplicate band id B" + std::to_string(it.id));
    } else {
      int a = std::abs(it.letter);
      if (a < 1 || a >= w.strands)
        throw error("banded word: generator out of range");
    }
  }
}

bool is_gen(const Item& it) { return !it.is_band; }

std::set<int> item_strands(const Item& it) {
  if (it.is_band) return {it.lo, it.hi};
  int a = std::abs(it.letter);
  return {a, a + 1};
}

// --- port-graph tracing -----------------------------------------------------
//
// the closure diagram lives on an annulus; boundary t between items t-1 and t
// carries ports (t, p) for strand positions p = 1..n.  every port has degree
// two, so the diagram decomposes into traced cycles.

struct Edge {
  int u = -1, v = -1;  // port indices
  int item = -1;
  enum Kind { pass, cross, side } kind = pass;
  int pos = 0;   // pass: strand position; cross: lower strand; side: unused
  int lo = 0, hi = 0;  // side: z span, u is the lo port
};

struct Traced {
  int components = 0;
  std::vector<int> comp;      // per port
  std::vector<int> dir;       // per edge: +1 if traversed u->v
  std::vector<int> order;     // traversal order of ports within components
};

struct PortGraph {
  int m = 0, n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> at;  // port -> incident edge indices

  int port(int t, int p) const { return t * n + (p - 1); }

  void add(int u, int v, Edge e) {
    e.u = u;
    e.v = v;
    at[u].push_back((int)edges.size());
    at[v].push_back((int)edges.size());
    edges.push_back(e);
  }
};

// builds the diagram graph; if surgered is true the bands are replaced by the
// band surgery (turnbacks along the band sides), otherwise the link passes
// straight through the band attach points
PortGraph build_graph(const BandedWord& w, bool surgered) {
  PortGraph g;
  g.m = (int)w.items.size();
  g.n = w.strands;
  g.at.assign(std::max(1, g.m) * g.n, {});
  for (int t = 0; t < g.m; ++t) {
    const Item& it = w.items[t];
    int t2 = (t + 1) % g.m;
    if (!it.is_band) {
      int a = std::abs(it.letter);
      Edge c;
      c.kind = Edge::cross;
      c.item = t;
      c.pos = a;
      g.add(g.port(t, a), g.port(t2, a + 1), c);
      g.add(g.port(t, a + 1), g.port(t2, a), c);
      for (int p = 1; p <= g.n; ++p)
        if (p != a && p != a + 1) {
          Edge e;
          e.kind = Edge::pass;
          e.item = t;
          e.pos = p;
          g.add(g.port(t, p), g.port(t2, p), e);
        }
    } else if (!surgered) {
      for (int p = 1; p <= g.n; ++p) {
        Edge e;
        e.kind = Edge::pass;
        e.item = t;
        e.pos = p;
        g.add(g.port(t, p), g.port(t2, p), e);
      }
    } else {
      Edge l;
      l.kind = Edge::side;
      l.item = t;
      l.lo = it.lo;
      l.hi = it.hi;
      g.add(g.port(t, it.lo), g.port(t, it.hi), l);
      g.add(g.port(t2, it.lo), g.port(t2, it.hi), l);
      for (int p = 1; p <= g.n; ++p)
        if (p != it.lo && p != it.hi) {
          Edge e;
          e.kind = Edge::pass;
          e.item = t;
          e.pos = p;
          g.add(g.port(t, p), g.port(t2, p), e);
        }
    }
  }
  return g;
}

Traced trace(const PortGraph& g) {
  Traced tr;
  int ports = (int)g.at.size();
  tr.comp.assign(ports, -1);
  tr.dir.assign(g.edges.size(), 0);
  if (g.m == 0) return tr;
  for (int s = 0; s < ports; ++s) {
    if (tr.comp[s] != -1) continue;
    int c = tr.components++;
    int cur = s;
    int via = -1;  // edge we arrived on
    do {
      tr.comp[cur] = c;
      tr.order.push_back(cur);
      int next_edge = -1;
      for (int e : g.at[cur])
        if (e != via && tr.dir[e] == 0) next_edge = e;
      if (via == -1) {
        // start in the +theta direction so arc labels are stable
        for (int e : g.at[cur])
          if (tr.dir[e] == 0 && g.edges[e].item == cur / g.n) next_edge = e;
      }
      if (next_edge == -1) {
        // both edges used: close the cycle by stepping onto the first edge
        // back to the start (happens only when the cycle closes)
        break;
      }
      const Edge& e = g.edges[next_edge];
      tr.dir[next_edge] = (e.u == cur) ? 1 : -1;
      cur = (e.u == cur) ? e.v : e.u;
      via = next_edge;
    } while (cur != s);
    if (tr.comp[cur] == -1) {
      tr.comp[cur] = c;
      tr.order.push_back(cur);
    }
  }
  return tr;
}

}  // namespace

Item gen_item(int letter) {
  Item it;
  it.letter = letter;
  return it;
}

Item band_item(int id, int lo, int hi, bool posmono) {
  Item it;
  it.is_band = true;
  it.id = id;
  it.lo = lo;
  it.hi = hi;
  it.posmono = posmono;
  return it;
}

SurgeryFingerprint surgery_fingerprint(const BandedWord& w) {
  validate_banded(w);
  // positive monotone bands surger to a positive generator on their strands
  BandedWord v;
  v.strands = w.strands;
  bool flat = false;
  for (const Item& it : w.items) {
    if (it.is_band && it.posmono)
      v.items.push_back(gen_item(it.lo));
    else {
      v.items.push_back(it);
      flat = flat || it.is_band;
    }
  }
  SurgeryFingerprint sf;
  if (!flat) {
    BraidWord word;
    word.strands = v.strands;
    word.letters = gen_letters(v);
    LinkFingerprint fp = link_fingerprint(word);
    sf.components = fp.components;
    sf.linking_matrix = fp.linking_matrix;
    sf.braid = word;
    return sf;
  }
  PortGraph g = build_graph(v, true);
  Traced tr = trace(g);
  sf.components = tr.components;
  int mu = tr.components;
  std::vector<std::vector<long long>> twice(mu, std::vector<long long>(mu, 0));
  // generator crossings: sign times the product of the traversal directions
  for (int t = 0; t < (int)v.items.size(); ++t) {
    if (v.items[t].is_band) continue;
    int sgn = v.items[t].letter > 0 ? 1 : -1;
    int e1 = -1, e2 = -1;
    for (int e = 0; e < (int)g.edges.size(); ++e)
      if (g.edges[e].kind == Edge::cross && g.edges[e].item == t) {
        if (e1 == -1)
          e1 = e;
        else
          e2 = e;
      }
    int c1 = tr.comp[g.edges[e1].u], c2 = tr.comp[g.edges[e2].u];
    if (c1 == c2) continue;
    twice[c1][c2] += sgn * tr.dir[e1] * tr.dir[e2];
    twice[c2][c1] += sgn * tr.dir[e1] * tr.dir[e2];
  }
  // band sides pass in front of the intermediate strands; each side crosses
  // the band item's own pass edges once, with sign d_theta * dz
  for (int e = 0; e < (int)g.edges.size(); ++e) {
    const Edge& se = g.edges[e];
    if (se.kind != Edge::side) continue;
    int cs = tr.comp[se.u];
    int dz = tr.dir[e];  // +1 when traversed lo -> hi
    for (int e2 = 0; e2 < (int)g.edges.size(); ++e2) {
      const Edge& pe = g.edges[e2];
      if (pe.kind != Edge::pass || pe.item != se.item) continue;
      if (pe.pos <= se.lo || pe.pos >= se.hi) continue;
      int cp = tr.comp[pe.u];
      if (cp == cs) continue;
      twice[cs][cp] += dz * tr.dir[e2];
      twice[cp][cs] += dz * tr.dir[e2];
    }
  }
  sf.linking_matrix.assign(mu, std::vector<int>(mu, 0));
  for (int a = 0; a < mu; ++a)
    for (int b = 0; b < mu; ++b) {
      if (twice[a][b] % 2 != 0)
        throw error("surgery tracing: odd crossing total between components");
      sf.linking_matrix[a][b] = (int)(twice[a][b] / 2);
    }
  return sf;
}

void apply_step(BandedWord& w, const CertStep& s) {
  int m = (int)w.items.size();
  auto need = [&](bool ok, const std::string& msg) {
    if (!ok) throw error("step not applicable: " + msg);
  };
  switch (s.kind) {
    case CertStep::far_commute: {
      need(s.p >= 0 && s.p + 1 < m, "far: position out of range");
      Item &a = w.items[s.p], &b = w.items[s.p + 1];
      need(is_gen(a) && is_gen(b), "far: both items must be generators");
      need(std::abs(std::abs(a.letter) - std::abs(b.letter)) >= 2,
           "far: generators do not commute");
      std::swap(a, b);
      break;
    }
    case CertStep::band_commute: {
      need(s.p >= 0 && s.p + 1 < m, "bandcomm: position out of range");
      Item &a = w.items[s.p], &b = w.items[s.p + 1];
      need(a.is_band || b.is_band, "bandcomm: no band at the position");
      std::set<int> sa = item_strands(a), sb = item_strands(b);
      for (int x : sa) need(!sb.count(x), "bandcomm: strand sets overlap");
      std::swap(a, b);
      break;
    }
    case CertStep::braid_relation: {
      need(s.p >= 0 && s.p + 2 < m, "rel: position out of range");
      Item &a = w.items[s.p], &b = w.items[s.p + 1], &c = w.items[s.p + 2];
      need(is_gen(a) && is_gen(b) && is_gen(c), "rel: items must be generators");
      need(a.letter == c.letter, "rel: outer letters differ");
      need((a.letter > 0) == (b.letter > 0), "rel: signs differ");
      need(std::abs(std::abs(a.letter) - std::abs(b.letter)) == 1,
           "rel: indices not adjacent");
      std::swap(a.letter, b.letter);
      c.letter = a.letter;
      break;
    }
    case CertStep::cancel_pair: {
      need(s.p >= 0 && s.p + 1 < m, "cancel: position out of range");
      const Item &a = w.items[s.p], &b = w.items[s.p + 1];
      need(is_gen(a) && is_gen(b), "cancel: items must be generators");
      need(a.letter == -b.letter, "cancel: letters are not inverse");
      w.items.erase(w.items.begin() + s.p, w.items.begin() + s.p + 2);
      break;
    }
    case CertStep::insert_pair: {
      need(s.p >= 0 && s.p <= m, "insert: position out of range");
      need(s.index >= 1 && s.index < w.strands, "insert: index out of range");
      need(s.sign == 1 || s.sign == -1, "insert: bad sign");
      w.items.insert(w.items.begin() + s.p,
                     {gen_item(s.sign * s.index), gen_item(-s.sign * s.index)});
      break;
    }
    case CertStep::rotate: {
      need(m > 0, "rotate: empty word");
      int k = ((s.k % m) + m) % m;
      std::rotate(w.items.begin(), w.items.begin() + k, w.items.end());
      break;
    }
    case CertStep::stabilize: {
      w.items.push_back(gen_item(w.strands));
      w.strands += 1;
      break;
    }
    case CertStep::destabilize: {
      need(w.strands >= 2, "destab: too few strands");
      need(m >= 1, "destab: empty word");
      const Item& last = w.items.back();
      need(is_gen(last) && last.letter == w.strands - 1,
           "destab: last item must be the positive top generator");
      for (int t = 0; t + 1 < m; ++t) {
        std::set<int> st = item_strands(w.items[t]);
        need(!st.count(w.strands), "destab: top strand is not free");
      }
      w.items.pop_back();
      w.strands -= 1;
      break;
    }
    case CertStep::band_move: {
      need(s.p >= 0 && s.p <= m, "bandmove: position out of range");
      need(s.index >= 1 && s.index < w.strands, "bandmove: index out of range");
      w.items.insert(w.items.begin() + s.p, gen_item(s.index));
      break;
    }
  }
}

// --- strongness --------------------------------------------------------------

namespace {

// an arc of a banded word: a segment of the closure between consecutive band
// attach points, labeled by its endpoints (band id, attached strand); marker-
// free components are labeled by their lowest strand
struct Arc {
  std::string from, to;
  std::set<int> ports;  // covered ports, t * n + (p - 1)
};

std::string marker_name(int id, int strand) {
  return "B" + std::to_string(id) + "@" + std::to_string(strand);
}

std::vector<Arc> arcs_of(const BandedWord& w) {
  std::vector<Arc> out;
  if (w.items.empty()) {
    for (int p = 1; p <= w.strands; ++p) {
      Arc a;
      a.from = a.to = "circ@" + std::to_string(p);
      out.push_back(a);
    }
    return out;
  }
  PortGraph g = build_graph(w, false);
  Traced tr = trace(g);
  int n = w.strands;
  // markers sit on the band item's pass edges at the attach strands; record
  // them on the left port of the item span
  std::map<int, std::vector<std::string>> marks;  // port -> marker names
  for (int t = 0; t < (int)w.items.size(); ++t) {
    const Item& it = w.items[t];
    if (!it.is_band) continue;
    marks[g.port(t, it.lo)].push_back(marker_name(it.id, it.lo));
    marks[g.port(t, it.hi)].push_back(marker_name(it.id, it.hi));
  }
  // split each traversal cycle at its markers
  std::vector<std::vector<int>> cycles(tr.components);
  for (int port : tr.order) cycles[tr.comp[port]].push_back(port);
  for (const std::vector<int>& cyc : cycles) {
    std::vector<std::pair<int, std::string>> hits;  // position in cycle, name
    for (int i = 0; i < (int)cyc.size(); ++i)
      if (marks.count(cyc[i]))
        for (const std::string& name : marks[cyc[i]]) hits.push_back({i, name});
    if (hits.empty()) {
      Arc a;
      int low = n + 1;
      for (int port : cyc) low = std::min(low, port % n + 1);
      a.from = a.to = "circ@" + std::to_string(low);
      for (int port : cyc) a.ports.insert(port);
      out.push_back(a);
      continue;
    }
    for (int h = 0; h < (int)hits.size(); ++h) {
      int h2 = (h + 1) % (int)hits.size();
      Arc a;
      a.from = hits[h].second;
      a.to = hits[h2].second;
      int i = hits[h].first;
      while (true) {
        a.ports.insert(cyc[i]);
        if (i == hits[h2].first && !(h == h2 && a.ports.size() == 1)) break;
        i = (i + 1) % (int)cyc.size();
        if (i == hits[h].first) break;  // single marker: full cycle
      }
      a.ports.insert(cyc[hits[h2].first]);
      out.push_back(a);
      if (hits.size() == 1) break;
    }
  }
  return out;
}

std::string arc_label(const Arc& a) { return a.from + "->" + a.to; }

}  // namespace

StrongnessResult strongness_check(const Certificate& c) {
  StrongnessResult res;
  // configurations along the sequence
  std::vector<BandedWord> seq{c.initial};
  for (const CertStep& s : c.steps) {
    BandedWord w = seq.back();
    apply_step(w, s);
    seq.push_back(w);
  }
  std::vector<std::vector<Arc>> arcs;
  for (const BandedWord& w : seq) arcs.push_back(arcs_of(w));

  // vertex ids: (step, arc index)
  std::map<std::pair<int, int>, int> vid;
  int nv = 0;
  for (int s = 0; s < (int)arcs.size(); ++s)
    for (int a = 0; a < (int)arcs[s].size(); ++a) vid[{s, a}] = nv++;
  std::vector<std::vector<int>> adj(nv);
  auto link2 = [&](int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
    res.edges += 1;
  };

  for (int s = 0; s + 1 < (int)seq.size(); ++s) {
    // identity edges between equal labels on consecutive configurations
    std::map<std::string, int> by_label;
    for (int a = 0; a < (int)arcs[s].size(); ++a)
      by_label[arc_label(arcs[s][a])] = a;
    for (int a = 0; a < (int)arcs[s + 1].size(); ++a) {
      auto it = by_label.find(arc_label(arcs[s + 1][a]));
      if (it != by_label.end()) link2(vid[{s, it->second}], vid[{s + 1, a}]);
    }
    if (c.steps[s].kind != CertStep::band_move) continue;
    // a positive band-move joins the four adjacent arcs pairwise: every arc
    // covering the touched strand positions before and after the move
    int n_before = seq[s].strands;
    int m_before = (int)seq[s].items.size();
    int idx = c.steps[s].index;
    int t_before = m_before == 0 ? 0 : c.steps[s].p % std::max(1, m_before);
    std::vector<int> group;
    for (int a = 0; a < (int)arcs[s].size(); ++a)
      for (int p : {idx, idx + 1}) {
        int port = t_before * n_before + (p - 1);
        if (m_before == 0 || arcs[s][a].ports.count(port) ||
            (arcs[s][a].from.rfind("circ@", 0) == 0 &&
             arcs[s][a].from == "circ@" + std::to_string(p)))
          group.push_back(vid[{s, a}]);
      }
    int n_after = seq[s + 1].strands;
    for (int a = 0; a < (int)arcs[s + 1].size(); ++a)
      for (int tt : {c.steps[s].p, (c.steps[s].p + 1) % (int)seq[s + 1].items.size()})
        for (int p : {idx, idx + 1})
          if (arcs[s + 1][a].ports.count(tt * n_after + (p - 1)))
            group.push_back(vid[{s + 1, a}]);
    std::sort(group.begin(), group.end());
    group.erase(std::unique(group.begin(), group.end()), group.end());
    for (int i = 0; i < (int)group.size(); ++i)
      for (int j = i + 1; j < (int)group.size(); ++j) link2(group[i], group[j]);
  }
  res.vertices = nv;

  // the condition: every vanishing arc of the final configuration reaches a
  // non-vanishing arc of the final configuration
  int last = (int)seq.size() - 1;
  std::set<std::string> vanishing;
  for (const FinalClaim& cl : c.final_claims)
    if (cl.trivial) {
      std::string mk = marker_name(cl.band_id, cl.strand);
      vanishing.insert(mk + "->" + mk);
    }
  std::vector<int> targets;
  std::vector<int> sources;
  for (int a = 0; a < (int)arcs[last].size(); ++a) {
    if (vanishing.count(arc_label(arcs[last][a])))
      sources.push_back(vid[{last, a}]);
    else
      targets.push_back(vid[{last, a}]);
  }
  std::set<int> target_set(targets.begin(), targets.end());
  res.holds = true;
  for (int src : sources) {
    std::vector<char> seen(nv, 0);
    std::queue<int> q;
    q.push(src);
    seen[src] = 1;
    bool ok = false;
    while (!q.empty() && !ok) {
      int u = q.front();
      q.pop();
      if (target_set.count(u)) ok = true;
      for (int v : adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          q.push(v);
        }
    }
    if (!ok) {
      res.holds = false;
      res.notes.push_back("vanishing arc not connected to a non-vanishing arc");
    }
  }
  if (sources.empty()) res.notes.push_back("no vanishing arcs");
  return res;
}

// --- verification ------------------------------------------------------------

namespace {

bool linking_equivalent(int mu, const std::vector<std::vector<int>>& a,
                        const std::vector<std::vector<int>>& b) {
  std::vector<int> perm(mu);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; ok && x < mu; ++x)
      for (int y = 0; ok && y < mu; ++y)
        if (a[x][y] != b[perm[x]][perm[y]]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

VerifyResult verify_certificate(const Certificate& c) {
  VerifyResult r;
  auto fail = [&](const std::string& why) {
    r.report.push_back("rejected: " + why);
    return r;
  };
  try {
    validate_banded(c.initial);
  } catch (const error& e) {
    return fail(e.what());
  }

  // (a) the gen part of the initial word is quasipositive
  if (c.initial_qp.strands != c.initial.strands)
    return fail("quasipositive factorization on the wrong strand count");
  for (const BandFactor& f : c.initial_qp.factors) {
    if (f.sign != 1) return fail("factorization contains a negative band");
    if (f.index < 1 || f.index >= c.initial.strands)
      return fail("factorization band index out of range");
    for (int l : f.conjugator)
      if (l == 0 || std::abs(l) >= c.initial.strands)
        return fail("factorization conjugator letter out of range");
  }
  if (free_reduce(c.initial_qp.flatten()) != free_reduce(gen_letters(c.initial)))
    return fail("factorization does not reduce to the initial word");
  r.report.push_back("initial word quasipositive with " +
                     std::to_string(c.initial_qp.factors.size()) + " bands");

  // (b) replay the steps
  BandedWord w = c.initial;
  for (int i = 0; i < (int)c.steps.size(); ++i) {
    try {
      apply_step(w, c.steps[i]);
    } catch (const error& e) {
      return fail("step " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  r.report.push_back("replayed " + std::to_string(c.steps.size()) + " steps");

  // (c) final claims cover all remaining bands
  std::map<int, const Item*> bands;
  for (const Item& it : w.items)
    if (it.is_band) bands[it.id] = &it;
  std::set<int> claimed;
  std::set<int> trivial_strands;
  for (const FinalClaim& cl : c.final_claims) {
    auto it = bands.find(cl.band_id);
    if (it == bands.end())
      return fail("claim for missing band B" + std::to_string(cl.band_id));
    if (!claimed.insert(cl.band_id).second)
      return fail("band B" + std::to_string(cl.band_id) + " claimed twice");
    const Item& b = *it->second;
    if (cl.trivial) {
      if (cl.strand != b.lo && cl.strand != b.hi)
        return fail("trivial claim names a strand the band does not touch");
      if (!trivial_strands.insert(cl.strand).second)
        return fail("two trivial bands claim strand " +
                    std::to_string(cl.strand));
      for (const Item& other : w.items) {
        if (!other.is_band && item_strands(other).count(cl.strand))
          return fail("claimed strand " + std::to_string(cl.strand) +
                      " carries a generator");
        if (other.is_band && other.id != b.id &&
            item_strands(other).count(cl.strand))
          return fail("claimed strand " + std::to_string(cl.strand) +
                      " carries another band");
      }
    } else {
      if (!b.posmono) return fail("posmono claim on a flat band");
    }
  }
  for (const auto& [id, b] : bands)
    if (!claimed.count(id))
      return fail("band B" + std::to_string(id) + " has no final claim");
  r.report.push_back("final bands: " + std::to_string(trivial_strands.size()) +
                     " trivial, " +
                     std::to_string(bands.size() - trivial_strands.size()) +
                     " positive monotone");

  // (d) the surgered initial link matches the claimed result
  SurgeryFingerprint sf;
  try {
    sf = surgery_fingerprint(c.initial);
  } catch (const error& e) {
    return fail(e.what());
  }
  LinkFingerprint rf = link_fingerprint(c.result);
  if (sf.components != rf.components)
    return fail("component count mismatch: surgery has " +
                std::to_string(sf.components) + ", result has " +
                std::to_string(rf.components));
  if (!linking_equivalent(sf.components, sf.linking_matrix, rf.linking_matrix))
    return fail("linking matrix mismatch");
  if (sf.braid) {
    if (!(homfly_poly(*sf.braid) == homfly_poly(c.result)))
      return fail("homfly mismatch between surgered word and result");
    if (signature(*sf.braid) != signature(c.result))
      return fail("signature mismatch between surgered word and result");
    r.report.push_back("result matches surgery (components, linking, homfly, signature)");
  } else {
    r.report.push_back("result matches surgery (components, linking)");
  }

  r.accepted = true;
  r.c_boundary = true;
  StrongnessResult st = strongness_check(c);
  r.strong = st.holds ? "yes" : "undetermined";
  r.report.push_back(std::string("strongness condition ") +
                     (st.holds ? "holds" : "fails") + " (" +
                     std::to_string(st.vertices) + " arcs, " +
                     std::to_string(st.edges) + " edges)");
  return r;
}

// --- text format -------------------------------------------------------------

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

[[noreturn]] void bad(int line_no, const std::string& msg) {
  throw error("line " + std::to_string(line_no) + ": " + msg);
}

int to_int(const std::string& s, int line_no) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) bad(line_no, "bad integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    bad(line_no, "bad integer '" + s + "'");
  }
}

// B<id>(i,j,flat) or B<id>(i,j,pos)
Item parse_band_token(const std::string& tok, int line_no) {
  size_t open = tok.find('(');
  if (tok.size() < 2 || tok[0] != 'B' || open == std::string::npos ||
      tok.back() != ')')
    bad(line_no, "bad band token '" + tok + "'");
  int id = to_int(tok.substr(1, open - 1), line_no);
  std::string body = tok.substr(open + 1, tok.size() - open - 2);
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : body) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else
      cur += ch;
  }
  parts.push_back(cur);
  if (parts.size() != 3) bad(line_no, "bad band token '" + tok + "'");
  bool posmono;
  if (parts[2] == "flat")
    posmono = false;
  else if (parts[2] == "pos")
    posmono = true;
  else
    bad(line_no, "bad band flavor '" + parts[2] + "'");
  return band_item(id, to_int(parts[0], line_no), to_int(parts[1], line_no),
                   posmono);
}

BandFactorization parse_qp_tokens(const std::vector<std::string>& toks,
                                  int strands, int line_no) {
  BandFactorization f;
  f.strands = strands;
  size_t i = 1;  // skip the keyword
  while (i < toks.size()) {
    BandFactor factor;
    if (toks[i] == "[") {
      ++i;
      while (i < toks.size() && toks[i] != "]")
        factor.conjugator.push_back(to_int(toks[i++], line_no));
      if (i == toks.size()) bad(line_no, "unterminated conjugator");
      ++i;
    }
    if (i == toks.size()) bad(line_no, "conjugator without a band letter");
    int l = to_int(toks[i++], line_no);
    if (l == 0) bad(line_no, "zero band letter");
    factor.index = std::abs(l);
    factor.sign = l > 0 ? 1 : -1;
    f.factors.push_back(factor);
  }
  return f;
}

}  // namespace

Certificate parse_certificate(const std::string& text) {
  Certificate c;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool saw_header = false, saw_strands = false, saw_word = false,
       saw_result = false, in_chi = false;
  std::set<int> band_ids;
  while (std::getline(in, raw)) {
    ++line_no;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::vector<std::string> toks = tokenize(raw);
    if (toks.empty()) continue;
    if (!saw_header) {
      if (toks.size() != 2 || toks[0] != "CERT" || toks[1] != "v1")
        bad(line_no, "expected 'CERT v1'");
      saw_header = true;
      continue;
    }
    const std::string& kw = toks[0];
    if (kw == "CHI") {
      in_chi = true;
      c.chi = ChiScript{};
      continue;
    }
    if (in_chi) {
      if (kw == "switch") {
        for (size_t i = 1; i < toks.size(); ++i)
          c.chi->switches.positions.push_back(to_int(toks[i], line_no));
      } else if (kw == "cancel") {
        for (size_t i = 1; i < toks.size(); ++i)
          c.chi->cancellations.pairs.push_back(to_int(toks[i], line_no));
      } else if (kw == "factor") {
        c.chi->factorization =
            parse_qp_tokens(toks, c.initial.strands, line_no);
      } else {
        bad(line_no, "unknown chi line '" + kw + "'");
      }
      continue;
    }
    if (kw == "strands") {
      if (toks.size() != 2) bad(line_no, "strands takes one number");
      c.initial.strands = to_int(toks[1], line_no);
      if (c.initial.strands < 1) bad(line_no, "strands must be >= 1");
      saw_strands = true;
    } else if (kw == "word") {
      if (!saw_strands) bad(line_no, "word before strands");
      for (size_t i = 1; i < toks.size(); ++i) {
        if (toks[i][0] == 'B') {
          Item b = parse_band_token(toks[i], line_no);
          if (!band_ids.insert(b.id).second)
            bad(line_no, "duplicate band id B" + std::to_string(b.id));
          c.initial.items.push_back(b);
        } else {
          c.initial.items.push_back(gen_item(to_int(toks[i], line_no)));
        }
      }
      saw_word = true;
    } else if (kw == "qp") {
      c.initial_qp = parse_qp_tokens(toks, c.initial.strands, line_no);
    } else if (kw == "step") {
      if (toks.size() < 2) bad(line_no, "empty step");
      CertStep s;
      const std::string& op = toks[1];
      auto arg = [&](size_t i) {
        if (i >= toks.size()) bad(line_no, "missing step argument");
        return to_int(toks[i], line_no);
      };
      if (op == "far") {
        s.kind = CertStep::far_commute;
        s.p = arg(2);
      } else if (op == "rel") {
        s.kind = CertStep::braid_relation;
        s.p = arg(2);
      } else if (op == "cancel") {
        s.kind = CertStep::cancel_pair;
        s.p = arg(2);
      } else if (op == "insert") {
        s.kind = CertStep::insert_pair;
        s.p = arg(2);
        s.index = arg(3);
        if (toks.size() < 5) bad(line_no, "missing insert sign");
        if (toks[4] == "+" || toks[4] == "+1" || toks[4] == "1")
          s.sign = 1;
        else if (toks[4] == "-" || toks[4] == "-1")
          s.sign = -1;
        else
          bad(line_no, "bad insert sign '" + toks[4] + "'");
      } else if (op == "rotate") {
        s.kind = CertStep::rotate;
        s.k = arg(2);
      } else if (op == "stab") {
        s.kind = CertStep::stabilize;
      } else if (op == "destab") {
        s.kind = CertStep::destabilize;
      } else if (op == "bandmove") {
        s.kind = CertStep::band_move;
        s.p = arg(2);
        s.index = arg(3);
      } else if (op == "bandcomm") {
        s.kind = CertStep::band_commute;
        s.p = arg(2);
      } else {
        bad(line_no, "unknown step '" + op + "'");
      }
      c.steps.push_back(s);
    } else if (kw == "final") {
      if (toks.size() < 3 || toks[1][0] != 'B')
        bad(line_no, "bad final claim");
      FinalClaim cl;
      cl.band_id = to_int(toks[1].substr(1), line_no);
      if (toks[2] == "trivial") {
        cl.trivial = true;
        if (toks.size() != 4) bad(line_no, "trivial claim takes a strand");
        cl.strand = to_int(toks[3], line_no);
      } else if (toks[2] == "posmono") {
        if (toks.size() != 3) bad(line_no, "posmono claim takes no argument");
      } else {
        bad(line_no, "unknown final claim '" + toks[2] + "'");
      }
      c.final_claims.push_back(cl);
    } else if (kw == "result") {
      std::string rest;
      for (size_t i = 1; i < toks.size(); ++i) rest += toks[i] + " ";
      c.result = parse_word(rest);
      saw_result = true;
    } else {
      bad(line_no, "unknown keyword '" + kw + "'");
    }
  }
  if (!saw_header) bad(line_no, "missing 'CERT v1' header");
  if (!saw_strands) bad(line_no, "missing strands line");
  if (!saw_word) bad(line_no, "missing word line");
  if (!saw_result) bad(line_no, "missing result line");
  validate_banded(c.initial);
  return c;
}

std::string render_certificate(const Certificate& c) {
  std::ostringstream out;
  out << "CERT v1\n";
  out << "strands " << c.initial.strands << "\n";
  out << "word";
  for (const Item& it : c.initial.items) {
    if (it.is_band)
      out << " B" << it.id << "(" << it.lo << "," << it.hi << ","
          << (it.posmono ? "pos" : "flat") << ")";
    else
      out << " " << it.letter;
  }
  out << "\n";
  out << "qp";
  for (const BandFactor& f : c.initial_qp.factors) {
    if (!f.conjugator.empty()) {
      out << " [";
      for (int l : f.conjugator) out << " " << l;
      out << " ]";
    }
    out << " " << f.sign * f.index;
  }
  out << "\n";
  for (const CertStep& s : c.steps) {
    switch (s.kind) {
      case CertStep::far_commute: out << "step far " << s.p << "\n"; break;
      case CertStep::braid_relation: out << "step rel " << s.p << "\n"; break;
      case CertStep::cancel_pair: out << "step cancel " << s.p << "\n"; break;
      case CertStep::insert_pair:
        out << "step insert " << s.p << " " << s.index << " "
            << (s.sign > 0 ? "+" : "-") << "\n";
        break;
      case CertStep::rotate: out << "step rotate " << s.k << "\n"; break;
      case CertStep::stabilize: out << "step stab\n"; break;
      case CertStep::destabilize: out << "step destab\n"; break;
      case CertStep::band_move:
        out << "step bandmove " << s.p << " " << s.index << "\n";
        break;
      case CertStep::band_commute:
        out << "step bandcomm " << s.p << "\n";
        break;
    }
  }
  for (const FinalClaim& cl : c.final_claims) {
    if (cl.trivial)
      out << "final B" << cl.band_id << " trivial " << cl.strand << "\n";
    else
      out << "final B" << cl.band_id << " posmono\n";
  }
  out << "result " << render_word(c.result) << "\n";
  if (c.chi) {
    out << "CHI\n";
    if (!c.chi->switches.positions.empty()) {
      out << "switch";
      for (int p : c.chi->switches.positions) out << " " << p;
      out << "\n";
    }
    if (!c.chi->cancellations.pairs.empty()) {
      out << "cancel";
      for (int p : c.chi->cancellations.pairs) out << " " << p;
      out << "\n";
    }
    if (c.chi->factorization) {
      out << "factor";
      for (const BandFactor& f : c.chi->factorization->factors) {
        if (!f.conjugator.empty()) {
          out << " [";
          for (int l : f.conjugator) out << " " << l;
          out << " ]";
        }
        out << " " << f.sign * f.index;
      }
      out << "\n";
    }
  }
  return out.str();
}

// --- example generators ------------------------------------------------------

namespace {

// braid word on mu strands with the prescribed pairwise linking numbers and
// one unknotted component per strand
BraidWord word_with_linking(int mu, const std::vector<std::vector<int>>& lk) {
  BraidWord w;
  w.strands = std::max(1, mu);
  for (int a = 0; a < mu; ++a)
    for (int b = a + 1; b < mu; ++b) {
      int v = lk[a][b];
      if (v == 0) continue;
      int i = a + 1, j = b + 1;  // strand positions
      for (int t = j - 1; t > i; --t) w.letters.push_back(t);
      for (int r = 0; r < 2 * std::abs(v); ++r)
        w.letters.push_back(v > 0 ? i : -i);
      for (int t = i + 1; t <= j - 1; ++t) w.letters.push_back(-t);
    }
  // touch the top strand so the strand count survives a round-trip through
  // the text format
  int touched = 1;
  for (int l : w.letters) touched = std::max(touched, std::abs(l) + 1);
  if (touched < mu && mu >= 2) {
    w.letters.push_back(-(mu - 1));
    w.letters.push_back(mu - 1);
  }
  return w;
}

// shifted reverse-mirror block of beta on the upper half of 2n strands
std::vector<int> mirror_block(const BraidWord& beta) {
  int n = beta.strands;
  std::vector<int> out;
  for (auto it = beta.letters.rbegin(); it != beta.letters.rend(); ++it) {
    int a = std::abs(*it);
    int shifted = 2 * n - a;
    out.push_back(*it > 0 ? -shifted : shifted);
  }
  return out;
}

void check_beta(const BraidWord& beta, const BandFactorization& beta_qp) {
  for (const BandFactor& f : beta_qp.factors)
    if (f.sign != 1) throw error("example: factorization must be positive");
  if (free_reduce(beta_qp.flatten()) != free_reduce(beta.letters))
    throw error("example: factorization does not match beta");
}

// emits cancel steps removing every adjacent inverse pair of the gen items,
// recording positions against the evolving word
void cancel_all(BandedWord& w, std::vector<CertStep>& steps) {
  bool again = true;
  while (again) {
    again = false;
    for (int p = 0; p + 1 < (int)w.items.size(); ++p) {
      if (!is_gen(w.items[p]) || !is_gen(w.items[p + 1])) continue;
      if (w.items[p].letter != -w.items[p + 1].letter) continue;
      CertStep s;
      s.kind = CertStep::cancel_pair;
      s.p = p;
      steps.push_back(s);
      apply_step(w, s);
      again = true;
      break;
    }
  }
}

}  // namespace

Certificate generate_example_cert(ExampleKind kind, const BraidWord& beta,
                                  const BandFactorization& beta_qp, int k) {
  if (kind != ExampleKind::mixed_monoid) check_beta(beta, beta_qp);
  int n = beta.strands;
  Certificate c;
  c.initial.strands = 2 * n;
  c.initial_qp = beta_qp;
  c.initial_qp.strands = 2 * n;

  std::vector<int> M = mirror_block(beta);
  std::vector<int> Minv = inverse_letters(M);

  if (kind == ExampleKind::split_mirror || kind == ExampleKind::connected_mirror) {
    for (int l : beta.letters) c.initial.items.push_back(gen_item(l));
    for (int l : M) c.initial.items.push_back(gen_item(l));
    for (int l : Minv) c.initial.items.push_back(gen_item(l));
    int first = kind == ExampleKind::split_mirror ? 1 : 2;
    int id = 1;
    for (int s = first; s <= n; ++s)
      c.initial.items.push_back(band_item(id++, s, 2 * n + 1 - s, false));
    // peel the mirror block from the inside out
    int e = (int)M.size();
    int base = (int)beta.letters.size();
    for (int i = 0; i < e; ++i) {
      CertStep s;
      s.kind = CertStep::cancel_pair;
      s.p = base + e - 1 - i;
      c.steps.push_back(s);
    }
    id = 1;
    for (int s = first; s <= n; ++s) {
      FinalClaim cl;
      cl.band_id = id++;
      cl.trivial = true;
      cl.strand = 2 * n + 1 - s;
      c.final_claims.push_back(cl);
    }
  } else {
    // monoid word: letters below k positive, at or above k negative; pair
    // every negative letter with a cancelling positive, and double the whole
    // mirrored block so the upper strands end up bare
    if (k < 1 || k > n) throw error("example: spared strand out of range");
    for (int l : beta.letters) {
      if (l == 0 || (l > 0 && l >= k) || (l < 0 && -l < k))
        throw error("example: beta is not in the mixed monoid");
      c.initial.items.push_back(gen_item(l));
      if (l < 0) c.initial.items.push_back(gen_item(-l));
    }
    for (int l : M) {
      c.initial.items.push_back(gen_item(l));
      c.initial.items.push_back(gen_item(-l));
    }
    int id = 1;
    for (int s = 1; s <= n; ++s) {
      if (s == k) continue;
      c.initial.items.push_back(band_item(id++, s, 2 * n + 1 - s, false));
    }
    BandedWord scratch = c.initial;
    cancel_all(scratch, c.steps);
    // one explicit positive band-move on the untouched lower strands
    CertStep bm;
    bm.kind = CertStep::band_move;
    bm.p = 0;
    bm.index = k == 1 ? (n >= 2 ? 2 : 1) : 1;
    if (bm.index < scratch.strands) {
      c.steps.push_back(bm);
      apply_step(scratch, bm);
    }
    id = 1;
    for (int s = 1; s <= n; ++s) {
      if (s == k) continue;
      FinalClaim cl;
      cl.band_id = id++;
      cl.trivial = true;
      cl.strand = 2 * n + 1 - s;
      c.final_claims.push_back(cl);
    }
  }

  if (kind == ExampleKind::mixed_monoid) {
    // the paired word reduces to the positive letters of beta
    c.initial_qp.factors.clear();
    for (int l : free_reduce(gen_letters(c.initial))) {
      if (l < 0)
        throw error("example: initial word did not reduce to positives");
      BandFactor f;
      f.index = l;
      c.initial_qp.factors.push_back(f);
    }
  }

  SurgeryFingerprint sf = surgery_fingerprint(c.initial);
  c.result = word_with_linking(sf.components, sf.linking_matrix);
  return c;
}

}  // namespace cbl
