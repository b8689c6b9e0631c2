#include "heishom/braid.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace heishom {

static long long parse_ll(const std::string& tok, size_t from, size_t to) {
  long long v = 0;
  auto res = std::from_chars(tok.data() + from, tok.data() + to, v);
  if (res.ec != std::errc() || res.ptr != tok.data() + to)
    throw std::invalid_argument("malformed braid token '" + tok + "'");
  return v;
}

BraidWord parse_word(const std::string& text) {
  BraidWord w;
  std::istringstream iss(text);
  std::string tok;
  while (iss >> tok) {
    GenKind kind;
    switch (tok[0]) {
      case 's': kind = GenKind::Sigma; break;
      case 'a': kind = GenKind::Alpha; break;
      case 'b': kind = GenKind::Beta; break;
      case 'c': kind = GenKind::Gamma; break;
      default: throw std::invalid_argument("unknown generator letter in token '" + tok + "'");
    }
    size_t pos = 1;
    size_t start = pos;
    while (pos < tok.size() && std::isdigit((unsigned char)tok[pos])) ++pos;
    if (pos == start) throw std::invalid_argument("missing index in token '" + tok + "'");
    long long idx = parse_ll(tok, start, pos);
    if (idx < 1 || idx > 1000000)
      throw std::invalid_argument("generator index out of range in token '" + tok + "'");
    long long e = 1;
    if (pos < tok.size()) {
      if (tok[pos] != '^')
        throw std::invalid_argument("malformed braid token '" + tok + "'");
      ++pos;
      if (pos >= tok.size()) throw std::invalid_argument("missing exponent in token '" + tok + "'");
      size_t estart = pos;
      if (tok[pos] == '-' || tok[pos] == '+') ++pos;
      while (pos < tok.size() && std::isdigit((unsigned char)tok[pos])) ++pos;
      if (pos != tok.size()) throw std::invalid_argument("malformed braid token '" + tok + "'");
      e = parse_ll(tok, estart, tok.size());
      if (e > 1000000 || e < -1000000)
        throw std::invalid_argument("exponent out of range in token '" + tok + "'");
    }
    int sign = e < 0 ? -1 : 1;
    long long count = e < 0 ? -e : e;
    for (long long i = 0; i < count; ++i) w.push_back({kind, (int)idx, sign});
  }
  return w;
}

std::string word_to_string(const BraidWord& w) {
  std::string out;
  for (const BraidGenerator& gen : w) {
    if (!out.empty()) out += ' ';
    switch (gen.kind) {
      case GenKind::Sigma: out += 's'; break;
      case GenKind::Alpha: out += 'a'; break;
      case GenKind::Beta: out += 'b'; break;
      case GenKind::Gamma: out += 'c'; break;
    }
    out += std::to_string(gen.index);
    if (gen.exp < 0) out += "^-1";
  }
  return out;
}

BraidWord word_inverse(const BraidWord& w) {
  BraidWord inv;
  inv.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    inv.push_back({it->kind, it->index, -it->exp});
  return inv;
}

HeisenbergElement phi_eval(const BraidWord& w, const SurfaceParams& P, int n) {
  HeisenbergElement acc = h_identity(P);
  for (const BraidGenerator& gen : w) {
    if (gen.exp != 1 && gen.exp != -1)
      throw std::invalid_argument("braid generator exponent must be +1 or -1");
    HeisenbergElement val = h_identity(P);
    switch (gen.kind) {
      case GenKind::Sigma:
        if (gen.index < 1 || (n >= 0 && gen.index > n - 1))
          throw std::invalid_argument("sigma index out of range: s" + std::to_string(gen.index));
        val = h_u(P, gen.exp);
        break;
      case GenKind::Alpha:
        val = h_gen(P, slot_a(P, gen.index), gen.exp);
        break;
      case GenKind::Beta:
        val = h_gen(P, slot_b(P, gen.index), gen.exp);
        break;
      case GenKind::Gamma:
        val = h_gen(P, slot_c(P, gen.index), gen.exp);
        break;
    }
    acc = h_mul(P, acc, val);
  }
  return acc;
}

namespace {

BraidWord cat(std::initializer_list<BraidWord> parts) {
  BraidWord w;
  for (const BraidWord& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

BraidWord sig(int i, int e = 1) { return {{GenKind::Sigma, i, e}}; }

}  // namespace

RelationReport check_relations(const SurfaceParams& P, int n) {
  if (n < 2) throw std::invalid_argument("strand count must be >= 2");
  RelationReport report;

  std::vector<BraidWord> surface_gens;
  std::vector<std::pair<GenKind, int>> surface_tags;
  for (int r = 1; r <= P.g; ++r) {
    surface_gens.push_back({{GenKind::Alpha, r, 1}});
    surface_tags.emplace_back(GenKind::Alpha, r);
  }
  for (int s = 1; s <= P.g; ++s) {
    surface_gens.push_back({{GenKind::Beta, s, 1}});
    surface_tags.emplace_back(GenKind::Beta, s);
  }
  for (int t = 1; t <= P.m - 1; ++t) {
    surface_gens.push_back({{GenKind::Gamma, t, 1}});
    surface_tags.emplace_back(GenKind::Gamma, t);
  }

  auto equal_images = [&](const BraidWord& lhs, const BraidWord& rhs) {
    return phi_eval(lhs, P, n) == phi_eval(rhs, P, n);
  };
  auto commute = [&](const BraidWord& x, const BraidWord& y) {
    return equal_images(cat({x, y}), cat({y, x}));
  };

  {  // BR1: far-apart half twists commute
    RelationFamilyResult f{"BR1", 0, true};
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j) {
        ++f.instances;
        f.pass = f.pass && commute(sig(i), sig(j));
      }
    report.families.push_back(f);
  }
  {  // BR2: adjacent braid relation
    RelationFamilyResult f{"BR2", 0, true};
    for (int i = 1; i <= n - 2; ++i) {
      ++f.instances;
      f.pass = f.pass && equal_images(cat({sig(i), sig(i + 1), sig(i)}),
                                      cat({sig(i + 1), sig(i), sig(i + 1)}));
    }
    report.families.push_back(f);
  }
  {  // CR1: surface loops commute with sigma_i, i > 1
    RelationFamilyResult f{"CR1", 0, true};
    for (const BraidWord& z : surface_gens)
      for (int i = 2; i <= n - 1; ++i) {
        ++f.instances;
        f.pass = f.pass && commute(z, sig(i));
      }
    report.families.push_back(f);
  }
  {  // CR2: each surface loop commutes with its own sigma_1 conjugate
    RelationFamilyResult f{"CR2", 0, true};
    for (const BraidWord& z : surface_gens) {
      ++f.instances;
      f.pass = f.pass && commute(z, cat({sig(1), z, sig(1)}));
    }
    report.families.push_back(f);
  }
  {  // CR3: distinct loops, excluding same-handle (alpha_r, beta_r) pairs
    RelationFamilyResult f{"CR3", 0, true};
    for (size_t p = 0; p < surface_gens.size(); ++p)
      for (size_t q = 0; q < surface_gens.size(); ++q) {
        if (p == q) continue;
        auto [kp, ip] = surface_tags[p];
        auto [kq, iq] = surface_tags[q];
        bool same_handle =
            ip == iq && ((kp == GenKind::Alpha && kq == GenKind::Beta) ||
                         (kp == GenKind::Beta && kq == GenKind::Alpha));
        if (same_handle) continue;
        ++f.instances;
        f.pass = f.pass && commute(surface_gens[p],
                                   cat({sig(1, -1), surface_gens[q], sig(1)}));
      }
    report.families.push_back(f);
  }
  {  // SCR: sigma_1 beta_r sigma_1 alpha_r sigma_1 = alpha_r sigma_1 beta_r
    RelationFamilyResult f{"SCR", 0, true};
    for (int r = 1; r <= P.g; ++r) {
      BraidWord al{{GenKind::Alpha, r, 1}};
      BraidWord be{{GenKind::Beta, r, 1}};
      ++f.instances;
      f.pass = f.pass && equal_images(cat({sig(1), be, sig(1), al, sig(1)}),
                                      cat({al, sig(1), be}));
    }
    report.families.push_back(f);
  }

  report.all_pass = true;
  for (const auto& f : report.families) report.all_pass = report.all_pass && f.pass;
  return report;
}

}  // namespace heishom
