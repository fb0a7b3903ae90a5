#include "szmap/serialize.hpp"

namespace szmap {

using nlohmann::json;

json to_json(const VertexList& v) { return json(v.vertices); }

json to_json(const NormalOperator& op) {
  return json{{"degeneracies", op.degeneracy_indices()},
              {"faces", op.face_indices()},
              {"domain_dim", op.domain_dim()}};
}

json to_json(const SubsetMorphism& U) { return json(U.members); }

json to_json(const GHomElement& x) {
  return json{{"n", x.n}, {"p", x.p}, {"q", x.q}, {"positions", x.positions},
              {"pretty", to_string(x)}};
}

json to_json(const SzResult& r) {
  json components = json::array();
  for (const SzComponent& c : r.components) {
    components.push_back(json{{"k", c.k},
                              {"operator", to_json(c.op)},
                              {"vertices", to_json(c.evaluated)},
                              {"pretty", applied_form(c.op, "g_" + std::to_string(c.k))}});
  }
  return json{{"n", r.n},         {"p", r.p},
              {"q", r.q},         {"sequence", r.seq.entries},
              {"components", components}, {"pretty", to_string(r)}};
}

json to_json(const VerifyReport& r) {
  json failures = json::array();
  for (const InstanceReport& f : r.failures) {
    failures.push_back(json{{"n", f.n},
                            {"p", f.p},
                            {"q", f.q},
                            {"sequence", f.seq},
                            {"detail", f.detail}});
  }
  return json{{"max_n", r.max_n},
              {"instances", r.instances},
              {"mismatches", r.mismatches},
              {"failures", failures}};
}

VertexList vertex_list_from_json(const json& j) {
  return VertexList(j.get<std::vector<int>>());
}

NormalOperator operator_from_json(const json& j) {
  return NormalOperator(j.at("degeneracies").get<std::vector<int>>(),
                        j.at("faces").get<std::vector<int>>(), j.at("domain_dim").get<int>());
}

SubsetMorphism subset_from_json(const json& j, int n) {
  return SubsetMorphism(n, j.get<std::vector<int>>());
}

GHomElement ghom_from_json(const json& j) {
  return GHomElement(j.at("n").get<int>(), j.at("p").get<int>(), j.at("q").get<int>(),
                     j.at("positions").get<std::vector<int>>());
}

SzResult sz_result_from_json(const json& j) {
  SzResult r;
  r.n = j.at("n").get<int>();
  r.p = j.at("p").get<int>();
  r.q = j.at("q").get<int>();
  r.seq = SequenceIndex(r.p, r.q, j.at("sequence").get<std::vector<int>>());
  for (const json& c : j.at("components")) {
    r.components.push_back(SzComponent{c.at("k").get<int>(),
                                       operator_from_json(c.at("operator")),
                                       vertex_list_from_json(c.at("vertices"))});
  }
  return r;
}

VerifyReport verify_report_from_json(const json& j) {
  VerifyReport r;
  r.max_n = j.at("max_n").get<int>();
  r.instances = j.at("instances").get<long long>();
  r.mismatches = j.at("mismatches").get<long long>();
  for (const json& f : j.at("failures")) {
    InstanceReport inst;
    inst.n = f.at("n").get<int>();
    inst.p = f.at("p").get<int>();
    inst.q = f.at("q").get<int>();
    inst.seq = f.at("sequence").get<std::vector<int>>();
    inst.match = false;
    inst.detail = f.at("detail").get<std::string>();
    r.failures.push_back(std::move(inst));
  }
  return r;
}

}  // namespace szmap
