#include "qmod/report.hpp"

#include <charconv>
#include <sstream>

#include "json.hpp"
#include "qmod/error.hpp"

namespace qmod {

namespace {

using json = nlohmann::ordered_json;

json vertex_map(const Algebra& alg, const std::vector<int>& values) {
  json j = json::object();
  for (std::size_t x = 0; x < values.size(); ++x) j[alg.quiver().vertices()[x]] = values[x];
  return j;
}

json arrow_map(const Algebra& alg, const std::vector<int>& values) {
  json j = json::object();
  for (std::size_t a = 0; a < values.size(); ++a) j[alg.quiver().arrow(a).id] = values[a];
  return j;
}

json shape_json(const ModuliShape& s) {
  json j;
  j["normalized"] = s.to_string();
  j["projectiveDimensions"] = s.normalized;
  j["empty"] = s.empty;
  j["conjectural"] = s.conjectural;
  json factors = json::array();
  for (const ShapeFactor& f : s.factors)
    factors.push_back({{"base", to_string(f.base)}, {"power", f.power}, {"conjectural", f.conjectural}});
  j["factors"] = factors;
  return j;
}

json component_json(const Algebra& alg, const Component& c) {
  json j;
  j["ranks"] = arrow_map(alg, c.ranks.values());
  j["dimension"] = component_dimension(c);
  j["glDimension"] = gl_dimension(c.dim);
  if (alg.classification().gentle) {
    j["stringDefect"] = string_defect(c);
    j["regular"] = is_regular(c);
  } else {
    j["stringDefect"] = nullptr;
    j["regular"] = nullptr;
  }
  return j;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string color_classes(const Algebra& alg, const Coloring& c) {
  std::vector<std::vector<std::string>> classes(c.color_count());
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) classes[c.color(a)].push_back(alg.quiver().arrow(a).id);
  std::string s;
  for (const auto& cls : classes) {
    if (!s.empty()) s += " ";
    s += "{";
    for (std::size_t i = 0; i < cls.size(); ++i) s += (i ? "," : "") + cls[i];
    s += "}";
  }
  return s;
}

json color_json(const Algebra& alg, const Coloring& c) {
  json classes = json::array();
  for (std::size_t k = 0; k < c.color_count(); ++k) {
    json cls = json::array();
    for (std::size_t a = 0; a < alg.arrow_count(); ++a)
      if (c.color(a) == k) cls.push_back(alg.quiver().arrow(a).id);
    classes.push_back(cls);
  }
  return classes;
}

std::string summary_line(const Algebra& alg) {
  const ClassReport& r = alg.classification();
  if (r.gentle) return "gentle: yes (" + std::to_string(find_coloring(alg).color_count()) + " colors)";
  if (r.string) return "gentle: no; string: yes; disjoint-chain: " + yes_no(r.disjoint_chain);
  return "gentle: no; disjoint-chain: " + yes_no(r.disjoint_chain);
}

}  // namespace

std::string report_json(const ModuliReport& report) {
  const Algebra& alg = *report.algebra;
  json j;
  j["schema"] = kReportSchema;
  json req;
  req["algebra"] = alg.name();
  req["fingerprint"] = alg.fingerprint();
  req["dim"] = vertex_map(alg, report.dim.values());
  req["theta"] = vertex_map(alg, report.theta.values());
  req["seed"] = report.options.seed;
  req["trials"] = report.options.trials;
  req["prime"] = report.options.prime;
  req["oraclePrime"] = report.options.oracle_prime;
  req["oracleSamples"] = report.options.oracle_samples;
  j["request"] = req;
  json comps = json::array();
  for (const ComponentReport& r : report.components) {
    json c = component_json(alg, r.component);
    c["semistable"] = r.decomposition.has_value();
    if (r.decomposition) {
      const StableDecomposition& d = *r.decomposition;
      json factors = json::array();
      for (const StableFactor& f : d.factors)
        factors.push_back({{"multiplicity", f.multiplicity},
                           {"dim", vertex_map(alg, f.dim.values())},
                           {"ranks", arrow_map(alg, f.ranks.values())},
                           {"orbitClosure", f.orbit_closure}});
      c["decomposition"] = {{"factors", factors}, {"ext1Certified", d.ext1_certified}};
      c["provenance"] = {{"regime", d.regime}, {"trials", d.trials}, {"resamples", d.resamples}};
    } else {
      c["decomposition"] = nullptr;
      c["provenance"] = {{"regime", "oracle"}, {"trials", report.options.trials}, {"resamples", 0}};
    }
    c["shape"] = shape_json(r.shape);
    c["assumptions"] = r.assumptions;
    comps.push_back(c);
  }
  j["components"] = comps;
  return j.dump(2) + "\n";
}

std::string report_text(const ModuliReport& report) {
  const Algebra& alg = *report.algebra;
  std::ostringstream out;
  out << "algebra " << alg.name() << "  d = " << to_string(report.dim) << "  theta = " << to_string(report.theta)
      << "\n";
  out << report.components.size() << " component(s)\n";
  for (const ComponentReport& r : report.components) {
    out << "  r = " << to_string(r.component.ranks) << "  dim C = " << r.dimension
        << "  dim GL = " << r.gl_dimension;
    if (r.string_defect) out << "  defect = " << *r.string_defect;
    out << "\n    shape: " << r.shape.to_string();
    if (r.shape.conjectural) out << " (conjectural)";
    out << "\n";
    if (r.decomposition)
      for (const StableFactor& f : r.decomposition->factors)
        out << "    factor " << f.multiplicity << " x " << to_string(f.dim) << " r = " << to_string(f.ranks)
            << (f.orbit_closure ? "  orbit closure" : "  family") << "\n";
  }
  return out.str();
}

std::string components_json(const Algebra& alg, const DimVector& d, const std::vector<Component>& components) {
  json j;
  j["algebra"] = alg.name();
  j["dim"] = vertex_map(alg, d.values());
  json comps = json::array();
  for (const Component& c : components) comps.push_back(component_json(alg, c));
  j["components"] = comps;
  return j.dump(2) + "\n";
}

std::string components_text(const Algebra& alg, const DimVector& d, const std::vector<Component>& components) {
  std::ostringstream out;
  out << "algebra " << alg.name() << "  d = " << to_string(d) << "\n";
  out << components.size() << " component(s)\n";
  for (const Component& c : components) {
    out << "  r = " << to_string(c.ranks) << "  dim C = " << component_dimension(c)
        << "  dim GL = " << gl_dimension(c.dim);
    if (alg.classification().gentle)
      out << "  defect = " << string_defect(c) << (is_regular(c) ? "  regular" : "");
    out << "\n";
  }
  return out.str();
}

std::string validate_json(const Algebra& alg) {
  const ClassReport& r = alg.classification();
  json j;
  j["algebra"] = alg.name();
  j["fingerprint"] = alg.fingerprint();
  j["acyclic"] = r.acyclic;
  j["quadraticMonomial"] = r.quadratic_monomial;
  j["disjointChain"] = r.disjoint_chain;
  j["string"] = r.string;
  j["gentle"] = r.gentle;
  j["stringFailure"] = r.string_failure;
  j["gentleFailure"] = r.gentle_failure;
  j["coloring"] = r.gentle ? color_json(alg, find_coloring(alg)) : json(nullptr);
  j["gentleCover"] = r.string && !r.gentle ? color_json(alg, find_gentle_cover(alg)) : json(nullptr);
  return j.dump(2) + "\n";
}

std::string validate_text(const Algebra& alg) {
  const ClassReport& r = alg.classification();
  std::ostringstream out;
  out << summary_line(alg) << "\n";
  out << "algebra " << alg.name() << ": " << alg.vertex_count() << " vertices, " << alg.arrow_count() << " arrows, "
      << alg.relations().size() << " relations\n";
  out << "  acyclic: " << yes_no(r.acyclic) << "\n";
  out << "  disjoint-chain: " << yes_no(r.disjoint_chain) << "\n";
  out << "  string: " << yes_no(r.string) << (r.string ? "" : " (" + r.string_failure + ")") << "\n";
  out << "  gentle: " << yes_no(r.gentle) << (r.gentle || !r.string ? "" : " (" + r.gentle_failure + ")") << "\n";
  if (r.gentle) out << "  coloring: " << color_classes(alg, find_coloring(alg)) << "\n";
  if (r.string && !r.gentle) out << "  gentle cover: " << color_classes(alg, find_gentle_cover(alg)) << "\n";
  return out.str();
}

Module parse_module(AlgebraPtr algebra, std::string_view document) {
  const Algebra& alg = *algebra;
  const Quiver& q = alg.quiver();
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Malformed, std::string("module document: ") + e.what());
  }
  try {
    const Field field(doc.at("prime").get<std::uint32_t>());
    DimVector d(q.vertex_count());
    for (const auto& [key, value] : doc.at("dim").items()) d[q.vertex_index(key)] = value.get<int>();
    std::vector<Matrix> maps;
    const json& ms = doc.at("maps");
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const Arrow& arrow = q.arrow(a);
      Matrix m(static_cast<std::size_t>(d[arrow.head]), static_cast<std::size_t>(d[arrow.tail]));
      if (ms.contains(arrow.id)) {
        const json& rows = ms.at(arrow.id);
        if (rows.size() != m.rows()) throw Error(ErrorCode::Malformed, "matrix '" + arrow.id + "' has wrong shape");
        for (std::size_t i = 0; i < m.rows(); ++i) {
          if (rows[i].size() != m.cols())
            throw Error(ErrorCode::Malformed, "matrix '" + arrow.id + "' has wrong shape");
          for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = field.from_int(rows[i][k].get<long long>());
        }
      }
      maps.push_back(std::move(m));
    }
    for (const auto& [key, value] : ms.items()) q.arrow_index(key);
    return Module(std::move(algebra), field, d, std::move(maps));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Malformed, std::string("module document: ") + e.what());
  }
}

std::string module_json(const Module& m) {
  const Algebra& alg = m.algebra();
  json j;
  j["prime"] = m.field().prime();
  j["dim"] = vertex_map(alg, m.dim().values());
  json maps = json::object();
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    json rows = json::array();
    const Matrix& mat = m.map(a);
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < mat.cols(); ++k) row.push_back(mat(i, k));
      rows.push_back(row);
    }
    maps[alg.quiver().arrow(a).id] = rows;
  }
  j["maps"] = maps;
  return j.dump();
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(ErrorCode::InvalidArgument, "expected a comma-separated list of integers, got '" +
                                                  std::string(text) + "'");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

}  // namespace qmod
