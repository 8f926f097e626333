#include "surfsub/heegaard.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "surfsub/bsgroups.hpp"
#include "surfsub/covers.hpp"

namespace surfsub {

  namespace {
    void require_coprime_positive(long long p, long long q, char const* who) {
      if (p < 1 || q < 1 || std::gcd(p, q) != 1) {
        throw std::invalid_argument(std::string(who) + ": need coprime p, q >= 1");
      }
    }

    long long mod(long long x, long long n) {
      return ((x % n) + n) % n;
    }

    constexpr int a_plus  = 0;
    constexpr int a_minus = 1;

    int b_disc(long long i, bool plus) {
      return 2 + 2 * static_cast<int>(i) + (plus ? 0 : 1);
    }

    // Appends an arc; B discs get their slot here, A0 slots are preassigned.
    int add_arc(Diagram& d, int from, int to, int chain, int a_slot) {
      int const id = static_cast<int>(d.arcs.size());
      Arc       arc;
      arc.tail_disc = from;
      arc.head_disc = to;
      arc.chain     = chain;
      if (from == a_plus) {
        arc.tail_slot = a_slot;
      } else {
        arc.tail_slot = static_cast<int>(d.discs[from].slots.size());
        d.discs[from].slots.push_back({});
      }
      if (to == a_minus) {
        arc.head_slot = a_slot;
      } else {
        arc.head_slot = static_cast<int>(d.discs[to].slots.size());
        d.discs[to].slots.push_back({});
      }
      d.discs[from].slots[arc.tail_slot] = {id, false};
      d.discs[to].slots[arc.head_slot]   = {id, true};
      d.arcs.push_back(arc);
      d.chains[chain].arcs.push_back(id);
      return id;
    }

    void add_chain(Diagram& d, char family, int label, std::vector<int> const& orbit,
                   bool plus) {
      int const chain = static_cast<int>(d.chains.size());
      int const m     = static_cast<int>(d.p + d.q);
      d.chains.push_back({family, label, {}});
      int prev = a_plus;
      for (int i : orbit) {
        int disc = b_disc(i, plus);
        add_arc(d, prev, disc, chain, chain);
        prev = disc;
      }
      add_arc(d, prev, a_minus, chain, m - 1 - chain);
    }

    Letter emitted(Disc const& arrival) {
      return arrival.plus ? -arrival.generator : arrival.generator;
    }
  }  // namespace

  OrbitData orbit_data(long long p, long long q) {
    require_coprime_positive(p, q, "orbit_data");
    OrbitData o{p, q, p * q, {}, {}};
    for (long long k = 1; k <= p; ++k) {
      std::vector<int> orbit;
      for (long long s = 0; s < q; ++s) {
        orbit.push_back(static_cast<int>(mod(k + s * p, o.n)));
      }
      o.omega.push_back(std::move(orbit));
    }
    for (long long l = 1; l <= q; ++l) {
      std::vector<int> orbit;
      for (long long s = 0; s < p; ++s) {
        orbit.push_back(static_cast<int>(mod(l + s * q, o.n)));
      }
      o.lambda.push_back(std::move(orbit));
    }
    return o;
  }

  Word lift_bs_word(long long p, long long q) {
    require_coprime_positive(p, q, "lift_bs_word");
    int const                     n = static_cast<int>(p * q);
    std::vector<std::vector<int>> action(2, std::vector<int>(static_cast<std::size_t>(n)));
    for (int v = 0; v < n; ++v) {
      action[0][v] = (v + 1) % n;  // a: x_v -> x_{v+1}
      action[1][v] = v;            // b: loop at x_v
    }
    std::vector<CoverEdge> tree;
    for (int v = 1; v <= n - 1; ++v) {
      tree.push_back({v, 1});
    }
    CoverGraph cover(std::move(action), 0, tree);

    // Schreier basis order is (gen, source): the a-edge out of x_0 first,
    // then the b-loops at x_0..x_{n-1}.
    Word raw = rewrite_in_schreier_basis(cover, bs_word(p, q).pow(p * q));
    std::vector<Letter> letters;
    for (Letter l : raw) {
      int g      = generator_of(l);
      int mapped = g == 1 ? n + 1 : g - 1;
      letters.push_back(l > 0 ? mapped : -mapped);
    }
    return Word(static_cast<std::size_t>(n) + 1, std::move(letters));
  }

  std::string lifted_generator_name(long long n, int g) {
    return g == n + 1 ? "a0" : "b" + std::to_string(g - 1);
  }

  Diagram build_diagram(long long p, long long q) {
    require_coprime_positive(p, q, "build_diagram");
    Diagram d;
    d.p      = p;
    d.q      = q;
    d.n      = p * q;
    d.orbits = orbit_data(p, q);
    int const m = static_cast<int>(p + q);

    auto make = [](std::string label, bool plus, int gen, int partner) {
      Disc disc;
      disc.label     = std::move(label);
      disc.plus      = plus;
      disc.generator = gen;
      disc.partner   = partner;
      return disc;
    };
    int const a_gen = static_cast<int>(d.n) + 1;
    d.discs.push_back(make("A0+", true, a_gen, a_minus));
    d.discs.push_back(make("A0-", false, a_gen, a_plus));
    d.discs[a_plus].slots.resize(static_cast<std::size_t>(m));
    d.discs[a_minus].slots.resize(static_cast<std::size_t>(m));
    for (long long i = 0; i < d.n; ++i) {
      auto idx = std::to_string(i);
      d.discs.push_back(make("B" + idx + "+", true, static_cast<int>(i) + 1, b_disc(i, false)));
      d.discs.push_back(make("B" + idx + "-", false, static_cast<int>(i) + 1, b_disc(i, true)));
    }

    for (long long k = 1; k <= p; ++k) {
      add_chain(d, 'O', static_cast<int>(k), d.orbits.omega[k - 1], false);
    }
    for (long long l = 1; l <= q; ++l) {
      add_chain(d, 'L', static_cast<int>(l), d.orbits.lambda[l - 1], true);
    }

    // A0+ slot s carries the start of chain s, A0- slot m-1-s its end.
    for (int s = 0; s < m; ++s) {
      d.discs[a_plus].glue.push_back(m - 1 - s);
      d.discs[a_minus].glue.push_back(m - 1 - s);
    }
    // B discs: slot 0 is the incoming arc, slot 1 the outgoing one; incoming
    // at B+ meets outgoing at B- and vice versa.
    for (long long i = 0; i < d.n; ++i) {
      d.discs[b_disc(i, true)].glue  = {1, 0};
      d.discs[b_disc(i, false)].glue = {1, 0};
    }
    return d;
  }

  VerificationReport verify_diagram(Diagram const& d) {
    VerificationReport r;
    r.discs = d.discs.size();
    r.arcs  = d.arcs.size();
    auto fail = [&](std::string msg) { r.failures.push_back(std::move(msg)); };

    // Slot bookkeeping.
    r.slots_consistent = true;
    auto slot_bad      = [&](std::string msg) {
      r.slots_consistent = false;
      fail("slots: " + msg);
    };
    for (std::size_t a = 0; a < d.arcs.size(); ++a) {
      auto const& arc = d.arcs[a];
      for (auto [disc, slot, head] :
           {std::tuple{arc.tail_disc, arc.tail_slot, false},
            std::tuple{arc.head_disc, arc.head_slot, true}}) {
        if (disc < 0 || disc >= static_cast<int>(d.discs.size()) || slot < 0
            || slot >= static_cast<int>(d.discs[disc].slots.size())) {
          slot_bad("arc " + std::to_string(a) + " has an endpoint off every disc");
          continue;
        }
        auto const& s = d.discs[disc].slots[slot];
        if (s.arc != static_cast<int>(a) || s.head != head) {
          slot_bad("arc " + std::to_string(a) + " disagrees with " + d.discs[disc].label
                   + "[" + std::to_string(slot) + "]");
        }
      }
    }
    std::size_t const m = static_cast<std::size_t>(d.p + d.q);
    for (std::size_t v = 0; v < d.discs.size(); ++v) {
      auto const& disc = d.discs[v];
      if (disc.slots.size() != disc.glue.size() || disc.partner < 0
          || disc.partner >= static_cast<int>(d.discs.size())
          || d.discs[disc.partner].partner != static_cast<int>(v)
          || d.discs[disc.partner].slots.size() != disc.slots.size()) {
        slot_bad(disc.label + " has an inconsistent gluing");
        continue;
      }
      for (std::size_t s = 0; s < disc.slots.size(); ++s) {
        int t = disc.glue[s];
        if (t < 0 || t >= static_cast<int>(disc.slots.size())
            || d.discs[disc.partner].glue[t] != static_cast<int>(s)) {
          slot_bad(disc.label + " gluing is not an involutive bijection");
        }
        if (disc.slots[s].arc < 0) {
          slot_bad(disc.label + "[" + std::to_string(s) + "] unused");
        }
      }
      bool is_a = v < 2;
      if (is_a && disc.slots.size() != m) {
        slot_bad(disc.label + " should carry p+q slots");
      }
      if (!is_a) {
        int heads = 0;
        for (auto const& s : disc.slots) {
          heads += s.head ? 1 : 0;
        }
        if (disc.slots.size() != 2 || heads != 1) {
          slot_bad(disc.label + " needs one inbound and one outbound arc");
        }
      }
    }
    if (!r.slots_consistent) {
      return r;
    }

    // Single curve: follow each arc to its head, across the gluing, and
    // out along the arc leaving the partner slot.
    std::vector<int> next(d.arcs.size(), -1);
    bool             orientable = true;
    for (std::size_t a = 0; a < d.arcs.size(); ++a) {
      auto const& arc     = d.arcs[a];
      auto const& disc    = d.discs[arc.head_disc];
      auto const& partner = d.discs[disc.partner];
      auto const& slot    = partner.slots[disc.glue[arc.head_slot]];
      if (slot.head) {
        orientable = false;
        fail("curve: arc " + std::to_string(a) + " meets another head across "
             + disc.label);
      }
      next[a] = slot.arc;
    }
    if (orientable && !d.arcs.empty()) {
      int a = 0;
      do {
        ++r.curve_length;
        a = next[a];
      } while (a != 0 && r.curve_length <= d.arcs.size());
      r.single_curve = r.curve_length == d.arcs.size();
      if (!r.single_curve) {
        fail("curve: cycle through arc 0 has " + std::to_string(r.curve_length) + " of "
             + std::to_string(d.arcs.size()) + " arcs");
      }
    }

    // Embeddedness: gluings reverse the cyclic slot order, and the rotation
    // system of discs and arcs is planar.
    r.order_reversing = true;
    for (auto const& disc : d.discs) {
      std::size_t const k = disc.glue.size();
      for (std::size_t s = 0; s < k; ++s) {
        long long lhs = disc.glue[(s + 1) % k];
        long long rhs = mod(disc.glue[s] - 1, static_cast<long long>(k));
        if (lhs != rhs) {
          r.order_reversing = false;
          fail("embedding: gluing at " + disc.label + " preserves cyclic order");
          break;
        }
      }
    }
    std::vector<bool> seen(2 * d.arcs.size(), false);
    for (std::size_t start = 0; start < seen.size(); ++start) {
      if (seen[start]) {
        continue;
      }
      ++r.faces;
      std::size_t dart = start;
      while (!seen[dart]) {
        seen[dart]       = true;
        auto const& arc  = d.arcs[dart / 2];
        bool        head = dart % 2 == 1;
        int         disc = head ? arc.tail_disc : arc.head_disc;
        int         slot = head ? arc.tail_slot : arc.head_slot;
        auto const& ds   = d.discs[disc].slots;
        auto const& nxt  = ds[(static_cast<std::size_t>(slot) + 1) % ds.size()];
        dart             = 2 * static_cast<std::size_t>(nxt.arc) + (nxt.head ? 1 : 0);
      }
    }
    long long const V = static_cast<long long>(d.discs.size());
    long long const E = static_cast<long long>(d.arcs.size());
    r.planar_euler    = V - E + r.faces;
    r.surface_euler   = r.faces - E;
    r.genus           = (2 - r.surface_euler) / 2;
    if (r.planar_euler != 2) {
      fail("embedding: rotation system has V-E+F = " + std::to_string(r.planar_euler));
    }
    if (r.surface_euler != 2 - 2 * (d.n + 1)) {
      fail("embedding: glued surface has genus " + std::to_string(r.genus)
           + ", expected " + std::to_string(d.n + 1));
    }
    r.embedded = r.order_reversing && r.planar_euler == 2
                 && r.surface_euler == 2 - 2 * (d.n + 1);

    // Word read off the curve.
    if (orientable && !d.arcs.empty()) {
      std::vector<Letter> letters;
      int                 a = 0;
      for (std::size_t step = 0; step < d.arcs.size(); ++step) {
        letters.push_back(emitted(d.discs[d.arcs[a].head_disc]));
        a = next[a];
        if (a == 0) {
          break;
        }
      }
      r.traversal = Word(static_cast<std::size_t>(d.n) + 1, std::move(letters));
      r.expected  = lift_bs_word(d.p, d.q);
      r.word_matches
          = cyclic_canonical(r.traversal) == cyclic_canonical(r.expected);
      if (!r.word_matches) {
        fail("word: traversal differs from the lifted word");
      }
    }
    return r;
  }

  Diagram swap_incoming_b_arcs(Diagram d, int i, int j) {
    int const di = b_disc(i, false);
    int const dj = b_disc(j, false);
    if (di >= static_cast<int>(d.discs.size()) || dj >= static_cast<int>(d.discs.size())) {
      throw std::invalid_argument("swap_incoming_b_arcs: no such disc");
    }
    auto find_head = [&](int disc) {
      for (std::size_t s = 0; s < d.discs[disc].slots.size(); ++s) {
        if (d.discs[disc].slots[s].head) {
          return static_cast<int>(s);
        }
      }
      throw std::invalid_argument("swap_incoming_b_arcs: disc has no inbound arc");
    };
    int si = find_head(di);
    int sj = find_head(dj);
    int ai = d.discs[di].slots[si].arc;
    int aj = d.discs[dj].slots[sj].arc;
    std::swap(d.discs[di].slots[si].arc, d.discs[dj].slots[sj].arc);
    d.arcs[ai].head_disc = dj;
    d.arcs[ai].head_slot = sj;
    d.arcs[aj].head_disc = di;
    d.arcs[aj].head_slot = si;
    return d;
  }

  std::string to_listing(Diagram const& d) {
    std::ostringstream out;
    out << "heegaard p=" << d.p << " q=" << d.q << " n=" << d.n << " discs="
        << d.discs.size() << " arcs=" << d.arcs.size() << "\n";
    for (std::size_t c = 0; c < d.chains.size(); ++c) {
      auto const& ch = d.chains[c];
      out << "chain " << c << " " << (ch.family == 'O' ? "Omega" : "Lambda") << ch.label
          << ":";
      for (int a : ch.arcs) {
        out << " " << a;
      }
      out << "\n";
    }
    for (std::size_t a = 0; a < d.arcs.size(); ++a) {
      auto const& arc = d.arcs[a];
      out << "arc " << a << " " << d.discs[arc.tail_disc].label << "[" << arc.tail_slot
          << "] -> " << d.discs[arc.head_disc].label << "[" << arc.head_slot << "]\n";
    }
    for (auto const& disc : d.discs) {
      if (!disc.plus) {
        continue;
      }
      out << "glue " << disc.label << " " << d.discs[disc.partner].label << ":";
      for (std::size_t s = 0; s < disc.glue.size(); ++s) {
        out << " " << s << ">" << disc.glue[s];
      }
      out << "\n";
    }
    return out.str();
  }

  std::string to_svg(Diagram const& d) {
    int const          rows  = static_cast<int>(d.chains.size());
    int const          cols  = static_cast<int>(std::max(d.p, d.q));
    int const          dx    = 60;
    int const          dy    = 40;
    int const          width = (cols + 3) * dx;
    int const          height = (rows + 1) * dy;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" font-family=\"sans-serif\" font-size=\"10\">\n";
    out << "<ellipse cx=\"" << dx / 2 << "\" cy=\"" << height / 2 << "\" rx=\"18\" ry=\""
        << height / 2 - 6 << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<text x=\"" << dx / 2 - 10 << "\" y=\"12\">A0+</text>\n";
    out << "<ellipse cx=\"" << width - dx / 2 << "\" cy=\"" << height / 2
        << "\" rx=\"18\" ry=\"" << height / 2 - 6
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<text x=\"" << width - dx / 2 - 10 << "\" y=\"12\">A0-</text>\n";
    for (int c = 0; c < rows; ++c) {
      int const   y  = dy * (c + 1) - dy / 2 + 10;
      auto const& ch = d.chains[c];
      std::vector<int> stops;
      for (std::size_t k = 0; k + 1 < ch.arcs.size(); ++k) {
        stops.push_back(d.arcs[ch.arcs[k]].head_disc);
      }
      out << "<polyline fill=\"none\" stroke=\"" << (ch.family == 'O' ? "steelblue" : "firebrick")
          << "\" points=\"" << dx / 2 + 18 << "," << y;
      for (std::size_t k = 0; k < stops.size(); ++k) {
        out << " " << (k + 2) * dx << "," << y;
      }
      out << " " << width - dx / 2 - 18 << "," << y << "\"/>\n";
      for (std::size_t k = 0; k < stops.size(); ++k) {
        int x = static_cast<int>(k + 2) * dx;
        out << "<circle cx=\"" << x << "\" cy=\"" << y
            << "\" r=\"9\" fill=\"white\" stroke=\"black\"/>\n";
        out << "<text x=\"" << x - 9 << "\" y=\"" << y - 11 << "\">"
            << d.discs[stops[k]].label << "</text>\n";
      }
    }
    out << "</svg>\n";
    return out.str();
  }

}  // namespace surfsub
