#include "surfsub/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "surfsub/alexander.hpp"
#include "surfsub/bsgroups.hpp"
#include "surfsub/covers.hpp"
#include "surfsub/heegaard.hpp"
#include "surfsub/smallcanc.hpp"
#include "surfsub/whitehead.hpp"

namespace surfsub {

  using nlohmann::json;

  namespace {
    constexpr std::size_t whitehead_max_rank = 8;
    // Largest pq for which the Heegaard diagram is built and verified.
    constexpr long long heegaard_max_index = 20000;
    constexpr std::size_t listed_pieces    = 5;

    std::string join_ints(std::vector<long long> const& v) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + std::to_string(v[i]);
      }
      return out;
    }

    std::vector<long long> parse_ints(std::string_view text, char const* what) {
      std::vector<long long> out;
      std::size_t            pos = 0;
      while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        auto      piece = text.substr(pos, end - pos);
        long long value = 0;
        auto [ptr, ec]  = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty()) {
          throw std::invalid_argument(std::string("bad integer list for ") + what + ": '"
                                      + std::string(text) + "'");
        }
        out.push_back(value);
        pos = end + 1;
      }
      return out;
    }

    CriterionRecord run_roots_of_unity(Word const& w, AnalyzeOptions const& opt,
                                       bool commutator) {
      CriterionRecord rec{"D", false, false, "", nullptr};
      if (w.rank() < 2) {
        rec.note = "needs rank >= 2";
        return rec;
      }
      std::vector<PhiMap> candidates;
      if (opt.phi) {
        PhiMap phi(*opt.phi);
        if (phi.rank() != w.rank() || phi(w) != 0) {
          rec.note = "given phi does not kill w";
          return rec;
        }
        candidates.push_back(phi);
      } else if (w.rank() == 2 && !commutator) {
        candidates.push_back(phi_for_rank2(w));
      } else {
        candidates = admissible_phis(w, opt.phi_bound);
      }
      if (candidates.empty()) {
        rec.note = "no admissible phi";
        return rec;
      }
      std::size_t tried = 0;
      std::string last_note;
      for (auto const& phi : candidates) {
        ++tried;
        auto v = criterion_roots_of_unity(w, phi);
        rec.applicable = rec.applicable || v.applicable;
        last_note      = v.note;
        if (v.fired) {
          auto const& c = *v.certificate;
          rec.fired     = true;
          rec.note      = v.note + " for phi = " + to_string(phi);
          json factors  = json::array();
          for (int d : c.all_factors) {
            factors.push_back(d);
          }
          rec.certificate = {{"phi", phi.values()},
                             {"delta", to_string(c.delta)},
                             {"d", c.d},
                             {"k", c.k},
                             {"cyclotomic_factor", to_string(c.cyclotomic_factor)},
                             {"predicted_betti", c.predicted_betti},
                             {"threshold", c.threshold},
                             {"cyclotomic_orders", factors}};
          return rec;
        }
      }
      rec.note = tried == 1 ? last_note + " for phi = " + to_string(candidates.front())
                            : "no cyclotomic factor for any of " + std::to_string(tried)
                                  + " maps phi";
      return rec;
    }

    CriterionRecord run_mod_p(Word const& w, bool commutator) {
      CriterionRecord rec{"E", false, false, "", nullptr};
      if (w.rank() != 2) {
        rec.note = "rank 2 only";
        return rec;
      }
      if (commutator) {
        rec.note = "w lies in the commutator subgroup";
        return rec;
      }
      auto v         = criterion_mod_p(w);
      rec.applicable = v.applicable;
      rec.fired      = v.fired;
      rec.note       = v.note;
      if (v.certificate) {
        rec.certificate = {{"delta", to_string(v.certificate->delta)},
                           {"content", v.certificate->content.str()},
                           {"prime", v.certificate->prime}};
      }
      return rec;
    }

    CriterionRecord run_c16(Word const& w) {
      auto            v = criterion_positive_c16(w);
      CriterionRecord rec{"C16", true, v.fired, v.note, nullptr};
      if (v.fired) {
        json pieces = json::array();
        for (std::size_t i = 0; i < v.pieces.pieces.size() && i < listed_pieces; ++i) {
          pieces.push_back(to_string(v.pieces.pieces[i]));
        }
        rec.certificate = {{"max_piece", v.pieces.max_piece},
                           {"length", v.pieces.relator_length},
                           {"symmetrized_size", v.pieces.symmetrized_size},
                           {"longest_pieces", pieces}};
      }
      return rec;
    }

    struct BsMatch {
      long long p = 0, q = 0;
    };

    // w's cyclic core is y^-1 x^e1 y x^e2 for {x, y} = {a, b}; returns
    // (e1, e2) with the a <-> A symmetry applied so that e1 > 0.
    std::optional<BsMatch> match_bs(Word const& w) {
      if (w.rank() != 2) {
        return std::nullopt;
      }
      Word const core = cyclic_reduce(w).core;
      for (int y = 1; y <= 2; ++y) {
        std::vector<std::size_t> at;
        for (std::size_t i = 0; i < core.size(); ++i) {
          if (generator_of(core[i]) == y) {
            at.push_back(i);
          }
        }
        if (at.size() != 2 || core[at[0]] != -core[at[1]]) {
          continue;
        }
        std::size_t start = core[at[0]] < 0 ? at[0] : at[1];
        std::size_t L     = core.size();
        long long   e[2]  = {0, 0};
        int         part  = 0;
        for (std::size_t s = 1; s < L; ++s) {
          Letter l = core[(start + s) % L];
          if (generator_of(l) == y) {
            part = 1;
          } else {
            e[part] += l > 0 ? 1 : -1;
          }
        }
        if (e[0] < 0) {
          e[0] = -e[0];
          e[1] = -e[1];
        }
        return BsMatch{e[0], e[1]};
      }
      return std::nullopt;
    }

    CriterionRecord run_bs(Word const& w) {
      CriterionRecord rec{"BS", false, false, "", nullptr};
      auto            m = match_bs(w);
      if (!m) {
        rec.note = "not of the form b^-1 a^p b a^q";
        return rec;
      }
      rec.applicable = true;
      std::string pq = "p = " + std::to_string(m->p) + ", q = " + std::to_string(m->q);
      if (m->q < 0) {
        rec.note = "b^-1 a^p b a^q with " + pq + " of opposite sign; diagram not built";
        return rec;
      }
      if (std::gcd(m->p, m->q) != 1) {
        rec.note = "b^-1 a^p b a^q with " + pq + " not coprime";
        return rec;
      }
      if (m->p * m->q > heegaard_max_index) {
        rec.note = "b^-1 a^p b a^q with " + pq + ": cover index too large to verify";
        return rec;
      }
      auto report = verify_diagram(build_diagram(m->p, m->q));
      rec.fired   = report.ok();
      rec.note    = "b^-1 a^p b a^q with " + pq
                 + (rec.fired ? ": lift to the Z/pq cover is an embedded curve"
                              : ": Heegaard verification failed");
      rec.certificate = {{"p", m->p},
                         {"q", m->q},
                         {"cover_index", m->p * m->q},
                         {"discs", report.discs},
                         {"arcs", report.arcs},
                         {"single_curve", report.single_curve},
                         {"embedded", report.embedded},
                         {"genus", report.genus},
                         {"word_matches", report.word_matches}};
      return rec;
    }

    bool is_baumslag_word(Word const& w) {
      static Word const baumslag = parse_word("AABAbaBab", 2);
      return w.rank() == 2
             && cyclic_canonical(w, true) == cyclic_canonical(baumslag, true);
    }
  }  // namespace

  CriterionRecord const* CriterionReport::criterion(std::string_view name) const {
    for (auto const& c : criteria) {
      if (c.name == name) {
        return &c;
      }
    }
    return nullptr;
  }

  CriterionReport analyze(std::string_view word_text, std::size_t rank,
                          AnalyzeOptions const& options) {
    Word const w = parse_word(word_text, rank);
    if (w.empty()) {
      throw std::invalid_argument("analyze: the word is trivial");
    }
    CriterionReport r;
    r.word = to_string(w);
    r.rank = rank;

    if (auto pp = is_proper_power(cyclic_reduce(w).core)) {
      r.proper_power   = true;
      r.power_root     = to_string(pp->root);
      r.power_exponent = pp->exponent;
      r.notes.push_back("proper power: D_n(w) is not hyperbolic");
    }
    r.commutator = is_in_commutator_subgroup(w);
    if (r.commutator) {
      auto trivial = permrep_cover(rank, std::vector<std::vector<int>>(rank, std::vector<int>{0}));
      r.betti2_double = betti2_double(trivial, w);
    }
    if (rank <= whitehead_max_rank) {
      auto v             = in_proper_free_factor(w);
      r.one_ended        = !v.in_proper_free_factor;
      r.one_ended_method = to_string(v.method);
    } else {
      r.one_ended_method = "not decided above rank 8";
    }

    r.criteria.push_back(run_roots_of_unity(w, options, r.commutator));
    r.criteria.push_back(run_mod_p(w, r.commutator));
    r.criteria.push_back(run_c16(w));
    r.criteria.push_back(run_bs(w));

    bool fired = false;
    for (auto const& c : r.criteria) {
      fired = fired || c.fired;
    }
    r.certified = (r.one_ended.value_or(false) && fired) || r.commutator;
    r.summary   = r.certified ? "surface subgroup certified" : "no criterion applies";
    if (r.commutator) {
      r.notes.push_back("w in the commutator subgroup: beta_2 of the double is "
                        + std::to_string(*r.betti2_double));
    }
    if (fired && !r.one_ended.value_or(false)) {
      r.notes.push_back("a criterion fired but the double is not known to be one-ended");
    }
    if (is_baumslag_word(w)) {
      r.notes.push_back("Baumslag's word: every finite quotient of G(w) is cyclic, and "
                        "no criterion here applies");
    }
    return r;
  }

  json to_json(CriterionReport const& r) {
    json criteria = json::array();
    for (auto const& c : r.criteria) {
      criteria.push_back({{"name", c.name},
                          {"applicable", c.applicable},
                          {"fired", c.fired},
                          {"note", c.note},
                          {"certificate", c.certificate}});
    }
    json flags = {{"proper_power", r.proper_power},
                  {"power_root", r.proper_power ? json(r.power_root) : json(nullptr)},
                  {"power_exponent", r.power_exponent},
                  {"commutator", r.commutator},
                  {"betti2_double", r.betti2_double ? json(*r.betti2_double) : json(nullptr)},
                  {"one_ended", r.one_ended ? json(*r.one_ended) : json(nullptr)},
                  {"one_ended_method", r.one_ended_method}};
    return {{"schema", 1},      {"word", r.word},           {"rank", r.rank},
            {"flags", flags},   {"criteria", criteria},     {"certified", r.certified},
            {"summary", r.summary}, {"notes", r.notes}};
  }

  CriterionReport report_from_json(json const& j) {
    if (j.at("schema").get<int>() != 1) {
      throw std::invalid_argument("report_from_json: unsupported schema");
    }
    CriterionReport r;
    r.word  = j.at("word").get<std::string>();
    r.rank  = j.at("rank").get<std::size_t>();
    auto& f = j.at("flags");
    r.proper_power = f.at("proper_power").get<bool>();
    if (!f.at("power_root").is_null()) {
      r.power_root = f.at("power_root").get<std::string>();
    }
    r.power_exponent = f.at("power_exponent").get<int>();
    r.commutator     = f.at("commutator").get<bool>();
    if (!f.at("betti2_double").is_null()) {
      r.betti2_double = f.at("betti2_double").get<long long>();
    }
    if (!f.at("one_ended").is_null()) {
      r.one_ended = f.at("one_ended").get<bool>();
    }
    r.one_ended_method = f.at("one_ended_method").get<std::string>();
    for (auto const& c : j.at("criteria")) {
      r.criteria.push_back({c.at("name").get<std::string>(), c.at("applicable").get<bool>(),
                            c.at("fired").get<bool>(), c.at("note").get<std::string>(),
                            c.at("certificate")});
    }
    r.certified = j.at("certified").get<bool>();
    r.summary   = j.at("summary").get<std::string>();
    r.notes     = j.at("notes").get<std::vector<std::string>>();
    return r;
  }

  std::string to_text(CriterionReport const& r) {
    std::ostringstream out;
    auto               yn = [](bool b) { return b ? "yes" : "no"; };
    out << "word " << r.word << " in F_" << r.rank << "\n";
    out << "  proper power:   " << yn(r.proper_power);
    if (r.proper_power) {
      out << " (" << r.power_root << ")^" << r.power_exponent;
    }
    out << "\n  commutator:     " << yn(r.commutator) << "\n";
    out << "  one-ended:      "
        << (r.one_ended ? yn(*r.one_ended) : "unknown") << " [" << r.one_ended_method
        << "]\n";
    for (auto const& c : r.criteria) {
      out << "  criterion " << c.name << ":" << std::string(5 - std::min<std::size_t>(4, c.name.size()), ' ')
          << (c.fired ? "fired" : c.applicable ? "negative" : "n/a") << "  " << c.note << "\n";
      if (!c.certificate.is_null()) {
        out << "    certificate " << c.certificate.dump() << "\n";
      }
    }
    for (auto const& n : r.notes) {
      out << "  note: " << n << "\n";
    }
    out << "  verdict: " << r.summary << "\n";
    return out.str();
  }

  CensusTable census(std::size_t rank, std::size_t max_len, unsigned threads) {
    if (rank != 2) {
      throw std::invalid_argument("census: rank 2 only");
    }
    if (max_len > census_max_length) {
      throw std::invalid_argument("census: max_len above "
                                  + std::to_string(census_max_length));
    }
    CensusTable table;
    auto const  words = enumerate_cyclic_classes(rank, max_len);
    table.rows.resize(words.size());
    if (threads == 0) {
      threads = std::max(1U, std::thread::hardware_concurrency());
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr       error;
    std::atomic<bool>        failed{false};
    auto                     worker = [&] {
      try {
        for (std::size_t i = next++; i < words.size() && !failed; i = next++) {
          auto      r   = analyze(to_string(words[i]), rank);
          CensusRow row;
          row.word         = r.word;
          row.length       = words[i].size();
          row.proper_power = r.proper_power;
          row.commutator   = r.commutator;
          row.one_ended    = r.one_ended.value_or(false);
          row.crit_d       = r.criterion("D")->fired;
          row.crit_e       = r.criterion("E")->fired;
          row.crit_c16     = r.criterion("C16")->fired;
          row.crit_bs      = r.criterion("BS")->fired;
          row.certified    = r.certified;
          table.rows[i]    = std::move(row);
        }
      } catch (...) {
        if (!failed.exchange(true)) {
          error = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }
    if (error) {
      std::rethrow_exception(error);
    }
    for (auto const& row : table.rows) {
      table.count_d += row.crit_d;
      table.count_e += row.crit_e;
      table.count_c16 += row.crit_c16;
      table.count_bs += row.crit_bs;
      table.count_certified += row.certified;
      table.count_one_ended += row.one_ended;
    }
    return table;
  }

  std::string to_csv(CensusTable const& table) {
    std::ostringstream out;
    out << "word,len,proper_power,commutator,one_ended,crit_D,crit_E,crit_C16,crit_BS,"
           "certified\n";
    for (auto const& r : table.rows) {
      out << r.word << "," << r.length << "," << r.proper_power << "," << r.commutator
          << "," << r.one_ended << "," << r.crit_d << "," << r.crit_e << "," << r.crit_c16
          << "," << r.crit_bs << "," << r.certified << "\n";
    }
    return out.str();
  }

  CoverReport cover_experiment(std::string_view word_text, std::size_t rank,
                               std::string_view cover_spec) {
    Word const  w = parse_word(word_text, rank);
    CoverReport r;
    r.word = to_string(w);
    r.spec = std::string(cover_spec);
    r.rank = rank;

    std::optional<CoverGraph> cover;
    std::optional<PhiMap>     phi;
    long long                 k = 0;
    if (cover_spec.starts_with("cyclic:")) {
      auto rest  = cover_spec.substr(7);
      auto colon = rest.find(':');
      auto kpart = rest.substr(0, colon);
      auto kv    = parse_ints(kpart, "k");
      if (kv.size() != 1 || kv[0] < 1) {
        throw std::invalid_argument("cover: k must be a positive integer");
      }
      k = kv[0];
      if (colon != std::string_view::npos) {
        phi = PhiMap(parse_ints(rest.substr(colon + 1), "phi"));
        if (phi->rank() != rank) {
          throw std::invalid_argument("cover: phi has the wrong number of entries");
        }
      } else if (rank == 1) {
        phi = PhiMap({1});
      } else if (rank == 2 && !is_in_commutator_subgroup(w)) {
        phi = phi_for_rank2(w);
      } else {
        auto cands = admissible_phis(w, 2);
        std::vector<long long> e1(rank, 0);
        e1[0] = 1;
        phi   = cands.empty() ? PhiMap(e1) : cands.front();
      }
      cover = cyclic_cover(rank, *phi, k);
      r.phi = phi->values();
    } else if (cover_spec.starts_with("perm:")) {
      cover = permrep_cover(rank, parse_permutations(cover_spec.substr(5), rank));
    } else {
      throw std::invalid_argument("cover: spec must be cyclic:k or perm:<cycles;...>");
    }

    auto lifts  = lift_relator(*cover, w);
    auto coker  = cokernel_invariants(lifts.matrix());
    r.index     = cover->index();
    r.betti1    = static_cast<long long>(coker.free_rank);
    for (auto const& t : coker.torsion) {
      r.torsion.push_back(t.str());
    }
    r.betti2                 = betti2_double(*cover, w);
    r.lifts                  = lifts.lifts.size();
    r.relator_acts_trivially = relator_acts_trivially(*cover, w);
    long long const kk       = static_cast<long long>(r.index);
    long long const n        = static_cast<long long>(rank);
    if (r.relator_acts_trivially) {
      long long rhs    = r.betti1 + kk * (2 - n) - 1;
      r.identity       = std::to_string(r.betti2) + " = " + std::to_string(r.betti1) + " + "
                   + std::to_string(kk) + "*(2-" + std::to_string(n) + ") - 1";
      r.identity_holds = r.betti2 == rhs;
    } else {
      long long lhs    = r.betti2 - r.betti1;
      long long rhs    = static_cast<long long>(r.lifts) - kk * (n - 1) - 1;
      r.identity       = std::to_string(r.betti2) + " - " + std::to_string(r.betti1) + " = "
                   + std::to_string(r.lifts) + " - " + std::to_string(kk) + "*("
                   + std::to_string(n) + "-1) - 1";
      r.identity_holds = lhs == rhs;
    }
    if (phi && rank >= 2 && (*phi)(w) == 0) {
      auto data = relation_vector(w, *phi);
      if (!data.delta.is_zero()) {
        r.alexander_prediction = betti_cyclic_cover(data, k);
      }
    }
    return r;
  }

  json to_json(CoverReport const& r) {
    return {{"schema", 1},
            {"word", r.word},
            {"rank", r.rank},
            {"cover", r.spec},
            {"index", r.index},
            {"phi", r.phi ? json(*r.phi) : json(nullptr)},
            {"betti1", r.betti1},
            {"torsion", r.torsion},
            {"betti2_double", r.betti2},
            {"relator_lifts", r.lifts},
            {"relator_acts_trivially", r.relator_acts_trivially},
            {"euler_identity", r.identity},
            {"euler_identity_holds", r.identity_holds},
            {"alexander_prediction",
             r.alexander_prediction ? json(*r.alexander_prediction) : json(nullptr)}};
  }

  std::string to_text(CoverReport const& r) {
    std::ostringstream out;
    out << "word " << r.word << " in F_" << r.rank << ", cover " << r.spec << " (index "
        << r.index << ")\n";
    if (r.phi) {
      out << "  phi:            (" << join_ints(*r.phi) << ")\n";
    }
    out << "  beta1(Y'):      " << r.betti1 << "\n  torsion:        ";
    if (r.torsion.empty()) {
      out << "none";
    }
    for (std::size_t i = 0; i < r.torsion.size(); ++i) {
      out << (i ? " " : "") << "Z/" << r.torsion[i];
    }
    out << "\n  relator lifts:  " << r.lifts
        << (r.relator_acts_trivially ? " (w acts trivially)" : "") << "\n";
    out << "  beta2(D'):      " << r.betti2 << "\n";
    out << "  Euler identity: " << r.identity << (r.identity_holds ? "  ok" : "  FAILS")
        << "\n";
    if (r.alexander_prediction) {
      out << "  Alexander:      beta1 predicted " << *r.alexander_prediction
          << (*r.alexander_prediction == r.betti1 ? "  ok" : "  MISMATCH") << "\n";
    }
    return out.str();
  }

}  // namespace surfsub
