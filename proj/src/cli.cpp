#include "szmap/cli.hpp"

#include <stdexcept>

#include "szmap/render.hpp"
#include "szmap/serialize.hpp"
#include "szmap/simplex_categories.hpp"
#include "szmap/szczarba.hpp"

namespace szmap {

namespace {

using nlohmann::json;

std::string dump(json doc) {
  doc["schema_version"] = kSchemaVersion;
  return doc.dump(2) + "\n";
}

void require(bool ok, const char* invariant) {
  if (!ok) throw std::invalid_argument(invariant);
}

RunResult run_compute(const RunConfig& cfg) {
  require(cfg.n >= 1, "compute requires n >= 1");
  require(0 <= cfg.p && cfg.p < cfg.q && cfg.q <= cfg.n,
          "compute requires 0 <= p < q <= n");
  SequenceIndex seq(cfg.p, cfg.q, cfg.sequence);  // validates the sequence invariants
  const SzResult r = sz_operator_route(seq, cfg.n);
  if (cfg.format == RunConfig::Format::json) {
    json doc = to_json(r);
    const AlphaTable t = alpha_table(cfg.n, seq);
    doc["alpha"] = t.alpha;
    doc["omega"] = t.omega;
    return {0, dump(doc)};
  }
  require(cfg.format == RunConfig::Format::text, "compute supports text or json output");
  return {0, to_string(r) + "\n"};
}

RunResult run_hin(const RunConfig& cfg) {
  require(cfg.n >= 0, "hin requires n >= 0");
  require(!cfg.subset.empty(), "hin requires a nonempty subset");
  SubsetMorphism U(cfg.n, cfg.subset);  // validates the subset invariants
  const GHomElement h = hin_vertex(U);
  if (cfg.format == RunConfig::Format::json) {
    json doc = to_json(h);
    doc["subset"] = to_json(U);
    return {0, dump(doc)};
  }
  require(cfg.format == RunConfig::Format::text, "hin supports text or json output");
  return {0, to_string(h) + "\n"};
}

template <typename E>
std::string element_lines(const std::vector<E>& elements) {
  std::string out;
  for (const E& e : elements) out += to_string(e) + "\n";
  return out;
}

template <typename E>
std::string chain_lines(const std::vector<ChainSimplex<E>>& chains, bool descending) {
  std::string out;
  for (const auto& c : chains) out += to_string(c, descending) + "\n";
  return out;
}

RunResult run_hom(const RunConfig& cfg) {
  require(cfg.family == 'c' || cfg.family == 'g', "hom family must be 'c' or 'g'");
  require(cfg.n >= 0 && 0 <= cfg.p && cfg.p <= cfg.q && cfg.q <= cfg.n,
          "hom requires 0 <= p <= q <= n");
  if (cfg.format == RunConfig::Format::dot) {
    return {0, cfg.family == 'c' ? dot_hasse_c(cfg.n, cfg.p, cfg.q)
                                 : dot_hasse_g(cfg.n, cfg.p, cfg.q)};
  }
  if (cfg.format == RunConfig::Format::json) {
    json doc{{"family", std::string(1, cfg.family)},
             {"n", cfg.n},
             {"p", cfg.p},
             {"q", cfg.q}};
    if (cfg.family == 'c') {
      json elems = json::array();
      for (const auto& U : enumerate_c_hom(cfg.n, cfg.p, cfg.q)) elems.push_back(to_json(U));
      doc["elements"] = elems;
    } else {
      json elems = json::array();
      for (const auto& x : enumerate_g_hom(cfg.n, cfg.p, cfg.q)) elems.push_back(x.positions);
      doc["elements"] = elems;
    }
    doc["count"] = doc["elements"].size();
    if (cfg.nerve_level >= 0) {
      doc["nerve_level"] = cfg.nerve_level;
      doc["nondegenerate_only"] = cfg.nondegenerate_only;
      json chains = json::array();
      if (cfg.family == 'c') {
        for (const auto& c :
             enumerate_nerve_c(cfg.n, cfg.p, cfg.q, cfg.nerve_level, cfg.nondegenerate_only)) {
          json entries = json::array();
          for (const auto& U : c.entries) entries.push_back(to_json(U));
          chains.push_back(entries);
        }
      } else {
        for (const auto& c :
             enumerate_nerve_g(cfg.n, cfg.p, cfg.q, cfg.nerve_level, cfg.nondegenerate_only)) {
          json entries = json::array();
          for (const auto& x : c.entries) entries.push_back(x.positions);
          chains.push_back(entries);
        }
      }
      doc["chains"] = chains;
    }
    return {0, dump(doc)};
  }
  require(cfg.format == RunConfig::Format::text, "hom supports text, json or dot output");
  if (cfg.nerve_level >= 0) {
    return {0, cfg.family == 'c'
                   ? chain_lines(enumerate_nerve_c(cfg.n, cfg.p, cfg.q, cfg.nerve_level,
                                                   cfg.nondegenerate_only),
                                 cfg.descending)
                   : chain_lines(enumerate_nerve_g(cfg.n, cfg.p, cfg.q, cfg.nerve_level,
                                                   cfg.nondegenerate_only),
                                 cfg.descending)};
  }
  return {0, cfg.family == 'c' ? element_lines(enumerate_c_hom(cfg.n, cfg.p, cfg.q))
                               : element_lines(enumerate_g_hom(cfg.n, cfg.p, cfg.q))};
}

RunResult run_verify(const RunConfig& cfg) {
  require(cfg.max_n >= 1, "verify requires max_n >= 1");
  const VerifyReport rep = verify_range(cfg.max_n);
  const int exit_code = rep.mismatches > 0 ? 1 : 0;
  if (cfg.format == RunConfig::Format::json) return {exit_code, dump(to_json(rep))};
  require(cfg.format == RunConfig::Format::text, "verify supports text or json output");
  return {exit_code, to_string(rep)};
}

RunResult run_diagram(const RunConfig& cfg) {
  require(cfg.n >= 1, "diagram requires n >= 1");
  if (cfg.format == RunConfig::Format::tikz) {
    require(0 <= cfg.p && cfg.p < cfg.q && cfg.q <= cfg.n,
            "diagram requires 0 <= p < q <= n");
    return {0, tikz_two_panel(cfg.n, cfg.p, cfg.q)};
  }
  require(cfg.format == RunConfig::Format::dot, "diagram supports dot or tikz output");
  return {0, dot_category_picture(cfg.family, cfg.n)};
}

}  // namespace

RunResult run(const RunConfig& config) {
  switch (config.command) {
    case RunConfig::Command::compute: return run_compute(config);
    case RunConfig::Command::hin: return run_hin(config);
    case RunConfig::Command::hom: return run_hom(config);
    case RunConfig::Command::verify: return run_verify(config);
    case RunConfig::Command::diagram: return run_diagram(config);
  }
  throw std::invalid_argument("unknown command");
}

}  // namespace szmap
