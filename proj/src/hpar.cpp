#include "parcomod/hpar.hpp"

#include <pthread.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <exception>
#include <filesystem>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

namespace parcomod {

namespace {

// ---------------------------------------------------------------------------
// Packed words: length in bits 60..63, letter i (1..15) in bits 56-4i..59-4i.
// Numeric order on codes is degree-lex order on words.

using Code = std::uint64_t;
constexpr int kMaxLen = 15;
constexpr Code kLetterBits = (Code(1) << 60) - 1;

inline int wlen(Code w) { return int(w >> 60); }
inline unsigned wletter(Code w, int i) { return unsigned(w >> (56 - 4 * i)) & 15u; }

inline Code wsub(Code w, int i, int j) {
  const int len = j - i;
  if (len <= 0) return 0;
  Code s = ((w & kLetterBits) << (4 * i)) & kLetterBits;
  Code mask = (kLetterBits >> (60 - 4 * len)) << (60 - 4 * len);
  return (Code(len) << 60) | (s & mask);
}

inline Code wcat(Code a, Code b) {
  const int la = wlen(a), lb = wlen(b);
  if (la + lb > kMaxLen) throw std::length_error("word exceeds the maximal length");
  return (Code(la + lb) << 60) | (a & kLetterBits) | ((b & kLetterBits) >> (4 * la));
}

inline Code wletter_code(unsigned x) { return (Code(1) << 60) | (Code(x) << 56); }

Code word_of(std::initializer_list<std::size_t> letters) {
  Code w = 0;
  for (auto x : letters)
    if (x != 0) w = wcat(w, wletter_code(unsigned(x)));
  return w;
}

Word unpack(Code w) {
  Word r;
  for (int i = 0; i < wlen(w); ++i) r.push_back(std::uint8_t(wletter(w, i)));
  return r;
}

Code pack(const Word& w) {
  Code c = 0;
  for (auto x : w) c = wcat(c, wletter_code(x));
  return c;
}

// ---------------------------------------------------------------------------
// Coefficients

template <class C>
C conv(const FieldElem& x);
template <>
mpq_class conv<mpq_class>(const FieldElem& x) {
  return x.rational();
}
template <>
FieldElem conv<FieldElem>(const FieldElem& x) {
  return x;
}

inline bool czero(const mpq_class& c) { return sgn(c) == 0; }
inline bool czero(const FieldElem& c) { return c.is_zero(); }

std::string cstr(const mpq_class& c) { return c.get_str(); }
std::string cstr(const FieldElem& c) { return c.str(); }

template <class C>
C cparse(const std::string& s, int order);
template <>
mpq_class cparse<mpq_class>(const std::string& s, int) {
  mpq_class q(s);
  q.canonicalize();
  return q;
}
template <>
FieldElem cparse<FieldElem>(const std::string& s, int order) {
  return FieldElem::parse(s, order);
}


// Polynomials sorted by decreasing word.
template <class C>
using Poly = std::vector<std::pair<Code, C>>;

template <class C>
Poly<C> to_poly(std::unordered_map<Code, C>& acc) {
  Poly<C> p;
  p.reserve(acc.size());
  for (auto& [w, c] : acc)
    if (!czero(c)) p.emplace_back(w, std::move(c));
  std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  return p;
}

// p - c*q
template <class C>
Poly<C> sub_scaled(const Poly<C>& p, const C& c, const Poly<C>& q) {
  Poly<C> r;
  r.reserve(p.size() + q.size());
  std::size_t i = 0, j = 0;
  while (i < p.size() || j < q.size()) {
    if (j == q.size() || (i < p.size() && p[i].first > q[j].first)) {
      r.push_back(p[i++]);
    } else if (i == p.size() || q[j].first > p[i].first) {
      r.emplace_back(q[j].first, -(c * q[j].second));
      ++j;
    } else {
      C v = p[i].second - c * q[j].second;
      if (!czero(v)) r.emplace_back(p[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

template <class C>
std::vector<Poly<C>> relations_in(const FiniteDimHopf& h) {
  const std::size_t n = h.n;
  std::vector<Poly<C>> rels;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // [a][k(1)][S(k(2))] - [a k(1)][S(k(2))] with k = b_b
      std::unordered_map<Code, C> p;
      for (const auto& [xy, c] : h.comult[b]) {
        std::size_t x = xy / n, y = xy % n;
        for (const auto& [s, cs] : h.antipode[y]) {
          C cc = conv<C>(c * cs);
          p[word_of({a, x, s})] += cc;
          for (const auto& [m, cm] : h.mult[a * n + x]) p[word_of({m, s})] -= cc * conv<C>(cm);
        }
      }
      auto r1 = to_poly(p);
      if (!r1.empty()) rels.push_back(std::move(r1));
      // [h(1)][S(h(2))][b] - [h(1)][S(h(2)) b] with h = b_a
      std::unordered_map<Code, C> q;
      for (const auto& [xy, c] : h.comult[a]) {
        std::size_t x = xy / n, y = xy % n;
        for (const auto& [s, cs] : h.antipode[y]) {
          C cc = conv<C>(c * cs);
          q[word_of({x, s, b})] += cc;
          for (const auto& [m, cm] : h.mult[s * n + b]) q[word_of({x, m})] -= cc * conv<C>(cm);
        }
      }
      auto r2 = to_poly(q);
      if (!r2.empty()) rels.push_back(std::move(r2));
    }
  return rels;
}

// ---------------------------------------------------------------------------
// Rewriting engine

template <class C>
class Engine {
 public:
  explicit Engine(std::size_t letters) : letters_(letters) {}

  std::unordered_map<Code, Poly<C>> lead;  // lead word -> tail, lead ≡ tail
  std::vector<Poly<C>> pending;
  int maxlw = 0;

  std::optional<std::pair<int, int>> find(Code w) const {
    const int len = wlen(w);
    for (int j = 1; j <= len; ++j)
      for (int i = j - 1; i >= std::max(0, j - maxlw); --i)
        if (lead.count(wsub(w, i, j))) return std::make_pair(i, j);
    return std::nullopt;
  }

  const Poly<C>& nfw(Code w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    Poly<C> r;
    auto f = find(w);
    if (!f) {
      r.emplace_back(w, C(1));
    } else {
      auto [i, j] = *f;
      Code a = wsub(w, 0, i), b = wsub(w, j, wlen(w));
      std::unordered_map<Code, C> acc;
      for (const auto& [t, c] : lead.at(wsub(w, i, j))) {
        const Poly<C>& s = nfw(wcat(wcat(a, t), b));
        for (const auto& [u, cu] : s) acc[u] += c * cu;
      }
      r = to_poly(acc);
    }
    memo_terms_ += r.size() + 1;
    return memo_.emplace(w, std::move(r)).first->second;
  }

  Poly<C> nf(const Poly<C>& p) {
    std::unordered_map<Code, C> acc;
    for (const auto& [w, c] : p)
      for (const auto& [u, cu] : nfw(w)) acc[u] += c * cu;
    return to_poly(acc);
  }

  void clear_memo() {
    memo_.clear();
    memo_terms_ = 0;
  }

  std::size_t stored_terms() const {
    std::size_t t = memo_terms_;
    for (const auto& [w, p] : lead) t += p.size() + 1;
    for (const auto& p : pending) t += p.size();
    return t;
  }

  // One degree of growth. Returns true if new leading words appeared.
  bool grow(int d, const std::function<bool()>& over_budget) {
    bool any = false, first = true;
    std::unordered_set<Code> fresh;
    for (;;) {
      std::vector<Poly<C>> batch;
      std::vector<Poly<C>> keep;
      for (auto& p : pending) {
        if (wlen(p.front().first) <= d)
          batch.push_back(std::move(p));
        else
          keep.push_back(std::move(p));
      }
      pending = std::move(keep);
      add_overlaps(d, first, fresh, batch);
      first = false;
      std::vector<Poly<C>> reduced;
      for (const auto& p : batch) {
        auto r = nf(p);
        if (!r.empty()) reduced.push_back(std::move(r));
      }
      if (reduced.empty()) break;
      auto rows = echelon(std::move(reduced));
      fresh.clear();
      for (auto& [w, p] : rows) {
        Poly<C> tail;
        for (std::size_t k = 1; k < p.size(); ++k) tail.emplace_back(p[k].first, -p[k].second);
        lead[w] = std::move(tail);
        fresh.insert(w);
        maxlw = std::max(maxlw, wlen(w));
      }
      any = true;
      // Leading words containing a fresh one are no longer needed as rules.
      std::vector<Code> drop;
      for (const auto& [lw, tail] : lead) {
        const int L = wlen(lw);
        bool contains = false;
        for (int i = 0; i < L && !contains; ++i)
          for (int j = i + 1; j <= L && !contains; ++j)
            if ((i > 0 || j < L) && fresh.count(wsub(lw, i, j))) contains = true;
        if (contains) drop.push_back(lw);
      }
      std::sort(drop.begin(), drop.end());
      for (Code lw : drop) {
        Poly<C> p{{lw, C(1)}};
        for (const auto& [u, c] : lead[lw]) p.emplace_back(u, -c);
        pending.push_back(std::move(p));
        lead.erase(lw);
        fresh.erase(lw);
      }
      maxlw = 0;
      for (const auto& [lw, t] : lead) maxlw = std::max(maxlw, wlen(lw));
      clear_memo();
      std::vector<Code> keys;
      for (const auto& [lw, t] : lead) keys.push_back(lw);
      std::sort(keys.begin(), keys.end());
      for (Code lw : keys) {
        Poly<C> t = nf(lead[lw]);
        lead[lw] = std::move(t);
      }
      if (over_budget()) {
        clear_memo();
        if (over_budget()) throw std::bad_alloc();
      }
    }
    return any;
  }

  // Normal words by length; nullopt when they do not terminate within limits.
  std::optional<std::vector<std::size_t>> count_normal(std::size_t cap = 4000000) const {
    std::vector<std::size_t> counts{1};
    std::vector<Code> frontier{0};
    for (int len = 1; len <= kMaxLen; ++len) {
      std::vector<Code> next;
      for (Code w : frontier)
        for (unsigned x = 1; x <= letters_; ++x) {
          Code v = wcat(w, wletter_code(x));
          bool red = false;
          for (int s = 1; s <= std::min(len, maxlw) && !red; ++s)
            red = lead.count(wsub(v, len - s, len)) > 0;
          if (!red) next.push_back(v);
          if (next.size() > cap) return std::nullopt;
        }
      if (next.empty()) return counts;
      counts.push_back(next.size());
      frontier = std::move(next);
    }
    return std::nullopt;
  }

 private:
  void add_overlaps(int d, bool first, const std::unordered_set<Code>& fresh,
                    std::vector<Poly<C>>& out) const {
    std::unordered_map<Code, std::vector<Code>> by_prefix;
    std::vector<Code> keys;
    for (const auto& [l, t] : lead) keys.push_back(l);
    std::sort(keys.begin(), keys.end());
    for (Code l : keys)
      for (int s = 1; s < wlen(l); ++s) by_prefix[wsub(l, 0, s)].push_back(l);
    for (Code l1 : keys) {
      const int L1 = wlen(l1);
      for (int s = 1; s < L1; ++s) {
        auto it = by_prefix.find(wsub(l1, L1 - s, L1));
        if (it == by_prefix.end()) continue;
        for (Code l2 : it->second) {
          const int L2 = wlen(l2);
          const int total = L1 + L2 - s;
          if (first ? total != d : total > d) continue;
          if (!first && !fresh.count(l1) && !fresh.count(l2)) continue;
          Code u = wsub(l1, 0, L1 - s), v = wsub(l2, s, L2);
          std::unordered_map<Code, C> acc;
          for (const auto& [t, c] : lead.at(l2)) acc[wcat(u, t)] += c;
          for (const auto& [t, c] : lead.at(l1)) acc[wcat(t, v)] -= c;
          auto p = to_poly(acc);
          if (!p.empty()) out.push_back(std::move(p));
        }
      }
    }
  }

  static std::map<Code, Poly<C>> echelon(std::vector<Poly<C>> polys) {
    std::map<Code, Poly<C>> rows;
    for (auto& p : polys) {
      while (!p.empty()) {
        Code w = p.front().first;
        auto it = rows.find(w);
        if (it != rows.end()) {
          C c = p.front().second;
          p = sub_scaled(p, c, it->second);
          continue;
        }
        C inv = C(1) / p.front().second;
        for (auto& [u, c] : p) c *= inv;
        for (auto& [lw, r] : rows) {
          auto pos = std::lower_bound(r.begin(), r.end(), w,
                                      [](const auto& a, Code x) { return a.first > x; });
          if (pos != r.end() && pos->first == w) {
            C c = pos->second;
            r = sub_scaled(r, c, p);
          }
        }
        rows.emplace(w, std::move(p));
        break;
      }
    }
    return rows;
  }

  std::size_t letters_;
  std::unordered_map<Code, Poly<C>> memo_;
  std::size_t memo_terms_ = 0;
};

// ---------------------------------------------------------------------------
// Checkpoints

template <class C>
Json poly_json(const Poly<C>& p) {
  Json a = Json::array();
  for (const auto& [w, c] : p) a.push_back(Json::array({unpack(w), cstr(c)}));
  return a;
}

template <class C>
Poly<C> poly_from(const Json& j, int order) {
  Poly<C> p;
  for (const auto& t : j) p.emplace_back(pack(t.at(0).get<Word>()), cparse<C>(t.at(1).get<std::string>(), order));
  std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  return p;
}

Json report_json(const DegreeReport& r) {
  Json j;
  j["degree"] = r.degree;
  j["leads"] = r.leads;
  j["normal_words"] = r.normal_words;
  j["upper"] = r.upper ? Json(*r.upper) : Json(nullptr);
  j["seconds"] = r.seconds;
  return j;
}

DegreeReport report_from(const Json& j) {
  DegreeReport r;
  r.degree = j.at("degree").get<int>();
  r.leads = j.at("leads").get<std::size_t>();
  r.normal_words = j.at("normal_words").get<std::vector<std::size_t>>();
  if (!j.at("upper").is_null()) r.upper = j.at("upper").get<std::size_t>();
  r.seconds = j.at("seconds").get<double>();
  return r;
}

constexpr const char* kCheckpointFormat = "parcomod-hpar-checkpoint";

template <class C>
void write_checkpoint(const std::string& path, const FiniteDimHopf& h, const Engine<C>& eng,
                      const SaturationResult& res) {
  Json j;
  j["format"] = kCheckpointFormat;
  j["version"] = 1;
  j["algebra"] = h.name;
  j["n"] = h.n;
  j["field_order"] = h.field_order;
  j["rational"] = res.rational;
  j["degree"] = res.reached_degree;
  std::vector<Code> keys;
  for (const auto& [l, t] : eng.lead) keys.push_back(l);
  std::sort(keys.begin(), keys.end());
  Json leads = Json::array();
  for (Code l : keys) leads.push_back(Json{{"word", unpack(l)}, {"tail", poly_json(eng.lead.at(l))}});
  j["leads"] = leads;
  Json pend = Json::array();
  for (const auto& p : eng.pending) pend.push_back(poly_json(p));
  j["pending"] = pend;
  Json reps = Json::array();
  for (const auto& r : res.degrees) reps.push_back(report_json(r));
  j["reports"] = reps;
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
    out << j.dump() << "\n";
  }
  std::filesystem::rename(tmp, path);
}

template <class C>
bool read_checkpoint(const std::string& path, const FiniteDimHopf& h, Engine<C>& eng,
                     SaturationResult& res) {
  std::ifstream in(path);
  if (!in) return false;
  Json j = Json::parse(in);
  if (j.value("format", "") != kCheckpointFormat || j.value("version", 0) != 1)
    throw std::invalid_argument("unrecognized checkpoint file " + path);
  if (j.at("n").get<std::size_t>() != h.n || j.at("algebra").get<std::string>() != h.name ||
      j.at("rational").get<bool>() != res.rational)
    throw std::invalid_argument("checkpoint belongs to a different algebra");
  const int order = j.at("field_order").get<int>();
  for (const auto& l : j.at("leads")) {
    Code w = pack(l.at("word").get<Word>());
    eng.lead[w] = poly_from<C>(l.at("tail"), order);
    eng.maxlw = std::max(eng.maxlw, wlen(w));
  }
  for (const auto& p : j.at("pending")) eng.pending.push_back(poly_from<C>(p, order));
  for (const auto& r : j.at("reports")) res.degrees.push_back(report_from(r));
  res.reached_degree = j.at("degree").get<int>();
  for (const auto& r : res.degrees)
    if (r.upper && (!res.upper || *r.upper < *res.upper)) res.upper = r.upper;
  return true;
}

template <class C>
SaturationResult run_saturation(const FiniteDimHopf& h, const SaturationOptions& opt,
                                bool rational) {
  SaturationResult res;
  res.rational = rational;
  Engine<C> eng(h.n - 1);
  bool resumed = false;
  if (opt.resume && !opt.checkpoint.empty()) resumed = read_checkpoint(opt.checkpoint, h, eng, res);
  if (!resumed) eng.pending = relations_in<C>(h);
  const std::size_t bytes_per_term = rational ? 96 : 256;
  auto over_budget = [&]() {
    return eng.stored_terms() * bytes_per_term > opt.budget_mb * (std::size_t(1) << 20);
  };
  auto t0 = std::chrono::steady_clock::now();
  std::optional<std::size_t> prev_upper = res.degrees.empty() ? std::nullopt : res.degrees.back().upper;
  for (int d = res.reached_degree + 1; d <= opt.max_degree; ++d) {
    if (opt.stop_at && res.upper && *res.upper <= *opt.stop_at) break;
    bool grew = false;
    try {
      grew = eng.grow(d, over_budget);
    } catch (const std::bad_alloc&) {
      res.budget_exceeded = true;
      break;
    }
    DegreeReport rep;
    rep.degree = d;
    rep.leads = eng.lead.size();
    if (auto counts = eng.count_normal()) {
      rep.normal_words = *counts;
      std::size_t s = 0;
      for (auto c : *counts) s += c;
      rep.upper = s;
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.degrees.push_back(rep);
    res.reached_degree = d;
    if (rep.upper && (!res.upper || *rep.upper < *res.upper)) res.upper = rep.upper;
    if (opt.progress) opt.progress(rep);
    if (!opt.checkpoint.empty()) write_checkpoint(opt.checkpoint, h, eng, res);
    // All overlaps of the current rules have length <= 2*maxlw - 1; once
    // those degrees pass without new rules the system is confluent.
    res.stabilized = !grew && eng.pending.empty() && rep.upper && prev_upper == rep.upper &&
                     d >= 2 * eng.maxlw - 1;
    if (res.stabilized) break;
    prev_upper = rep.upper;
  }
  return res;
}

// Runs f on a thread with a large stack; normal-form recursion is deep.
void run_big_stack(const std::function<void()>& f) {
  struct Ctx {
    const std::function<void()>* f;
    std::exception_ptr err;
  } ctx{&f, nullptr};
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, std::size_t(1) << 29);
  pthread_t th;
  auto body = [](void* p) -> void* {
    auto* c = static_cast<Ctx*>(p);
    try {
      (*c->f)();
    } catch (...) {
      c->err = std::current_exception();
    }
    return nullptr;
  };
  if (pthread_create(&th, &attr, body, &ctx) != 0) {
    pthread_attr_destroy(&attr);
    f();
    return;
  }
  pthread_join(th, nullptr);
  pthread_attr_destroy(&attr);
  if (ctx.err) std::rethrow_exception(ctx.err);
}

}  // namespace

// ---------------------------------------------------------------------------

RelationSpace build_relations(const FiniteDimHopf& h) {
  if (h.unit != h.basis(0)) throw std::invalid_argument("relations need a unit-first basis");
  if (h.n > 16) throw std::invalid_argument("word engine supports at most 16 basis elements");
  RelationSpace rs;
  rs.n = h.n;
  auto rels = relations_in<FieldElem>(h);
  std::vector<Code> words;
  for (const auto& p : rels)
    for (const auto& [w, c] : p) words.push_back(w);
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  SparseEchelon ech(words.size());
  for (const auto& p : rels) {
    WordPoly wp;
    SparseVec sv;
    for (const auto& [w, c] : p) {
      wp.emplace_back(unpack(w), c);
      sv.emplace_back(std::lower_bound(words.begin(), words.end(), w) - words.begin(), c);
    }
    std::sort(sv.begin(), sv.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    ech.insert(sv);
    rs.gens.push_back(std::move(wp));
  }
  rs.rank = ech.rank();
  return rs;
}

SaturationResult saturate(const FiniteDimHopf& h0, const SaturationOptions& opt) {
  FiniteDimHopf h = with_unit_first(h0);
  if (h.n > 16) throw std::invalid_argument("word engine supports at most 16 basis elements");
  if (h.n == 1) {
    SaturationResult r;
    DegreeReport rep;
    rep.normal_words = {1};
    rep.upper = 1;
    r.degrees.push_back(rep);
    r.upper = 1;
    r.stabilized = true;
    return r;
  }
  SaturationResult res;
  run_big_stack([&] {
    if (h.is_rational())
      res = run_saturation<mpq_class>(h, opt, true);
    else
      res = run_saturation<FieldElem>(h, opt, false);
  });
  return res;
}

// ---------------------------------------------------------------------------
// Representation bundles

namespace {

Vec flatten(const BlockElem& x, std::size_t total) {
  Vec v;
  v.reserve(total);
  for (const auto& m : x) v.insert(v.end(), m.data().begin(), m.data().end());
  return v;
}

BlockElem block_mul(const BlockElem& a, const BlockElem& b) {
  BlockElem r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] * b[i]);
  return r;
}

BlockElem block_add(const BlockElem& a, const BlockElem& b, const FieldElem& c) {
  BlockElem r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + scale(c, b[i]);
  return r;
}

BlockElem block_zero(const std::vector<std::size_t>& dims) {
  BlockElem r;
  for (auto d : dims) r.push_back(Matrix(d, d));
  return r;
}

BlockElem block_identity(const std::vector<std::size_t>& dims) {
  BlockElem r;
  for (auto d : dims) r.push_back(Matrix::identity(d));
  return r;
}

}  // namespace

RepresentationBundle bundle_from_comodules(const std::vector<PartialComodule>& ms) {
  RepresentationBundle b;
  if (ms.empty()) return b;
  const std::size_t n = ms.front().n();
  b.ops.assign(n, BlockElem{});
  for (const auto& m : ms) {
    if (m.n() != n) throw DimensionMismatch("bundle members over different algebras");
    if (!check_pcm(m).ok())
      throw std::invalid_argument("bundle member is not a partial comodule: " + m.provenance);
    b.dims.push_back(m.d);
    b.names.push_back(m.provenance);
    for (std::size_t a = 0; a < n; ++a) b.ops[a].push_back(m.op(a));
  }
  return b;
}

RepresentationBundle group_bundle(const GroupClassification& c) {
  std::vector<PartialComodule> ms;
  for (const auto& row : c.rows)
    for (const auto& m : row.simples) ms.push_back(m);
  return bundle_from_comodules(ms);
}

RepresentationBundle kac_bundle(const std::vector<KacRow>& rows) {
  std::vector<PartialComodule> ms;
  for (const auto& row : rows)
    for (const auto& m : row.simples) ms.push_back(m);
  return bundle_from_comodules(ms);
}

BlockAlgebra generated_block_algebra(const std::vector<BlockElem>& gens,
                                     const std::vector<std::size_t>& dims) {
  std::size_t total = 0;
  for (auto d : dims) total += d * d;
  BlockAlgebra alg;
  alg.dims = dims;
  SparseEchelon ech(total);
  std::deque<BlockElem> queue;
  auto add = [&](const BlockElem& x) {
    if (ech.insert(flatten(x, total))) {
      alg.basis.push_back(x);
      queue.push_back(x);
    }
  };
  add(block_identity(dims));
  for (const auto& g : gens) add(g);
  while (!queue.empty()) {
    BlockElem x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) add(block_mul(g, x));
  }
  return alg;
}

std::size_t lower_bound(const RepresentationBundle& b) {
  if (b.dims.empty()) return 0;
  return generated_block_algebra(b.ops, b.dims).dim();
}

std::map<std::size_t, std::size_t> bundle_blocks(const RepresentationBundle& b) {
  std::map<std::size_t, std::size_t> m;
  for (auto d : b.dims) ++m[d];
  return m;
}

std::string block_string(const std::map<std::size_t, std::size_t>& blocks) {
  std::string s;
  for (const auto& [d, c] : blocks) {
    if (!s.empty()) s += " x ";
    s += d == 1 ? "k" : "M" + std::to_string(d);
    if (c != 1) s += "^" + std::to_string(c);
  }
  return s.empty() ? "0" : s;
}

CertifiedDim certified_dim(const FiniteDimHopf& acting, const RepresentationBundle& b,
                           SaturationOptions opt) {
  CertifiedDim r;
  r.lower = lower_bound(b);
  if (!opt.stop_at) opt.stop_at = r.lower;
  r.saturation = saturate(acting, opt);
  for (const auto& d : r.saturation.degrees)
    if (d.upper && *d.upper < r.lower)
      throw SoundnessViolation("upper bound " + std::to_string(*d.upper) + " below lower bound " +
                             std::to_string(r.lower));
  r.upper = r.saturation.upper;
  if (r.upper && *r.upper == r.lower) {
    r.status = CertifiedDim::Certified;
    r.blocks = bundle_blocks(b);
  }
  return r;
}

// ---------------------------------------------------------------------------
// A_par

BlockAlgebra apar_algebra(const FiniteDimHopf& acting, const RepresentationBundle& b) {
  const std::size_t n = acting.n;
  if (b.ops.size() != n) throw DimensionMismatch("bundle does not match the acting algebra");
  std::vector<BlockElem> sops(n);
  for (std::size_t c = 0; c < n; ++c) {
    BlockElem s = block_zero(b.dims);
    for (const auto& [d, v] : acting.antipode[c]) s = block_add(s, b.ops[d], v);
    sops[c] = std::move(s);
  }
  std::vector<BlockElem> gens;
  for (std::size_t a = 0; a < n; ++a) {
    BlockElem e = block_zero(b.dims);
    for (const auto& [xy, v] : acting.comult[a])
      e = block_add(e, block_mul(b.ops[xy / n], sops[xy % n]), v);
    gens.push_back(std::move(e));
  }
  return generated_block_algebra(gens, b.dims);
}

AparReport apar_analysis(const FiniteDimHopf& acting, const RepresentationBundle& b) {
  AparReport rep;
  BlockAlgebra alg = apar_algebra(acting, b);
  const std::size_t m = alg.dim();
  rep.dim = m;
  std::size_t total = 0;
  for (auto d : b.dims) total += d * d;
  std::vector<Vec> flat;
  for (const auto& x : alg.basis) flat.push_back(flatten(x, total));
  Subspace sp = Subspace::span(flat, total);
  // Structure constants in the echelon basis of the span.
  std::vector<BlockElem> eb;
  for (const auto& v : sp.basis_vectors()) {
    BlockElem x;
    std::size_t off = 0;
    for (auto d : b.dims) {
      x.push_back(Matrix::from_data(d, d, Vec(v.begin() + off, v.begin() + off + d * d)));
      off += d * d;
    }
    eb.push_back(std::move(x));
  }
  std::vector<std::vector<Vec>> sc(m, std::vector<Vec>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto c = sp.coordinates(flatten(block_mul(eb[i], eb[j]), total));
      if (!c) throw std::logic_error("generated algebra is not closed");
      sc[i][j] = *c;
    }
  // Regular trace form T(i, j) = Tr(L_i L_j) = Σ_{k,l} c_{ik}^l c_{jl}^k.
  Matrix gram(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      FieldElem t;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l)
          if (!sc[i][k][l].is_zero() && !sc[j][l][k].is_zero()) t += sc[i][k][l] * sc[j][l][k];
      gram(i, j) = t;
      gram(j, i) = t;
    }
  rep.semisimple = rank(gram) == m;
  // Center: Σ_i x_i (c_{ij} - c_{ji}) = 0 for all j.
  Matrix cm(m * m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) cm(j * m + k, i) = sc[i][j][k] - sc[j][i][k];
  rep.center_dim = m - rank(cm);

  // One-dimensional blocks: dim of A / (A[A,A]A).
  std::vector<Vec> comms;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vec c = sub(sc[i][j], sc[j][i]);
      if (!is_zero_vec(c)) comms.push_back(std::move(c));
    }
  SparseEchelon ideal(m);
  std::deque<Vec> queue;
  auto push = [&](const Vec& v) {
    if (ideal.insert(v)) queue.push_back(v);
  };
  for (const auto& c : comms) push(c);
  auto coord_mul = [&](const Vec& x, std::size_t k, bool left) {
    Vec r(m);
    for (std::size_t i = 0; i < m; ++i)
      if (!x[i].is_zero()) axpy(r, x[i], left ? sc[k][i] : sc[i][k]);
    return r;
  };
  while (!queue.empty()) {
    Vec x = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 0; k < m; ++k) {
      push(coord_mul(x, k, true));
      push(coord_mul(x, k, false));
    }
  }
  const std::size_t ones = m - ideal.rank();
  if (ones > 0) rep.blocks[1] = ones;

  // Larger blocks from simple constituents of the bundle members. A_par acts
  // semisimply when the trace form is nondegenerate, so the composition
  // factors of each member are its constituents.
  std::vector<std::vector<Matrix>> found;
  std::size_t sum = ones;
  for (std::size_t mi = 0; mi < b.dims.size() && sum < m; ++mi) {
    std::vector<Matrix> ops;
    for (const auto& g : alg.basis) ops.push_back(g[mi]);
    std::size_t d = b.dims[mi];
    while (d > 1 && sum < m) {
      auto simple = find_simple_subspace(ops, Subspace::whole(d));
      if (!simple) break;
      auto r = restrict_ops(ops, *simple);
      const std::size_t k = r[0].rows();
      bool seen = k == 1;
      for (const auto& f : found)
        if (!seen && f[0].rows() == k && !intertwiners(f, r).empty()) seen = true;
      if (!seen) {
        sum += k * k;
        ++rep.blocks[k];
        found.push_back(std::move(r));
      }
      // Continue on V / S.
      Matrix q = simple->quotient_map();
      auto np = simple->non_pivots();
      Matrix lift(d, np.size());
      for (std::size_t t = 0; t < np.size(); ++t) lift(np[t], t) = FieldElem(1);
      for (auto& op : ops) op = q * op * lift;
      d = np.size();
    }
  }
  std::size_t count = 0;
  for (const auto& [k, c] : rep.blocks) count += c;
  rep.blocks_resolved = sum == m && count == rep.center_dim;
  return rep;
}

// ---------------------------------------------------------------------------

RestrictionImageReport restriction_image(HopfPtr h, const std::vector<Vec>& es,
                                         std::optional<std::size_t> apar_dim) {
  const std::size_t n = h->n, k = es.size();
  RestrictionImageReport rep;
  rep.apar_dim = apar_dim;
  std::vector<Subspace> targets;
  for (const auto& e : es) {
    auto sub = generate_coideal_subalgebra(h, e);
    targets.push_back(ae_times_e(sub));
    rep.product_dim += targets.back().dim();
  }
  // Tuples are concatenated vectors; products are componentwise.
  auto tmul = [&](const Vec& x, const Vec& y) {
    Vec r(k * n);
    for (std::size_t t = 0; t < k; ++t) {
      Vec a(x.begin() + t * n, x.begin() + (t + 1) * n), b(y.begin() + t * n, y.begin() + (t + 1) * n);
      Vec p = h->mul(a, b);
      std::copy(p.begin(), p.end(), r.begin() + t * n);
    }
    return r;
  };
  std::vector<Vec> gens;
  for (std::size_t a = 0; a < n; ++a) {
    Vec g(k * n);
    for (std::size_t t = 0; t < k; ++t) {
      Vec de = h->comul(es[t]);
      Vec comp(n);
      for (std::size_t i = 0; i < n; ++i) comp[i] = de[i * n + a];
      Vec v = h->mul(es[t], comp);
      if (!targets[t].contains(v)) throw ConstructionError("image outside A_e e");
      std::copy(v.begin(), v.end(), g.begin() + t * n);
    }
    gens.push_back(std::move(g));
  }
  Vec unit(k * n);
  for (std::size_t t = 0; t < k; ++t) std::copy(es[t].begin(), es[t].end(), unit.begin() + t * n);
  SparseEchelon ech(k * n);
  std::deque<Vec> queue;
  auto add = [&](const Vec& v) {
    if (ech.insert(v)) queue.push_back(v);
  };
  add(unit);
  for (const auto& g : gens) add(g);
  while (!queue.empty()) {
    Vec x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) add(tmul(g, x));
  }
  rep.image_dim = ech.rank();
  return rep;
}

}  // namespace parcomod
