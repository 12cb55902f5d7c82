#include "signpat/report.hpp"

namespace signpat {

using nlohmann::json;

json to_json(const RootSet& roots) {
  json out = json::array();
  for (const auto& r : roots.roots()) out.push_back(to_pq_string(r));
  return out;
}

json to_json(const ConfigHit& hit) {
  return {{"position", hit.position}, {"kind", std::string(1, to_char(hit.kind))}};
}

json to_json(const SearchReport& report) {
  json orders = json::array();
  for (const auto& found : report.orders) {
    orders.push_back({{"order", found.order.str()}, {"witness", to_json(found.witness)}});
  }
  return {{"pattern", report.pattern.str()},
          {"canonical_order", report.canonical.str()},
          {"orders", std::move(orders)},
          {"samples_used", report.samples_used}};
}

json to_json(const STReport& report) {
  json s = json::array();
  for (const auto& p : report.s) s.push_back(p.str());
  json t = json::array();
  json verdicts = json::array();
  for (std::size_t i = 0; i < report.t.size(); ++i) {
    t.push_back(report.t[i].str());
    json hits = json::array();
    for (const auto& hit : report.verdicts[i]) hits.push_back(to_json(hit));
    verdicts.push_back({{"pattern", report.t[i].str()}, {"hits", std::move(hits)}});
  }
  return {{"d", report.lift.size() - 1},
          {"source", report.source.str()},
          {"lift", report.lift.compact()},
          {"S", std::move(s)},
          {"T", std::move(t)},
          {"verdicts", std::move(verdicts)},
          {"holds", report.holds()}};
}

json to_json(const TheoremReport& report) {
  json outcomes = json::array();
  for (const auto& o : report.outcomes) {
    json witnesses = json::array();
    for (const auto& w : o.noncanonical_witnesses) {
      witnesses.push_back({{"order", w.order.str()}, {"witness", to_json(w.witness)}});
    }
    outcomes.push_back({{"pattern", o.pattern.str()},
                        {"canonical", o.canonical},
                        {"noncanonical_witnesses", std::move(witnesses)},
                        {"samples_used", o.samples_used},
                        {"passed", o.passed}});
  }
  return {{"d", report.degree}, {"passed", report.passed()}, {"outcomes", std::move(outcomes)}};
}

RootSet root_set_from_json(const json& j) {
  std::vector<Rational> roots;
  for (const auto& r : j) roots.push_back(parse_rational(r.get<std::string>()));
  return RootSet(std::move(roots));
}

void write_census_csv(std::ostream& out, const std::vector<CensusRow>& rows) {
  out << kCensusCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.degree << ',' << r.total << ',' << r.canonical << ',' << r.noncanonical;
    for (auto w : r.windows) out << ',' << w;
    out << '\n';
  }
}

}  // namespace signpat
