#include "pentaflag/certificate.hpp"

#include <json.hpp>

namespace pentaflag {

namespace {

using Json = nlohmann::ordered_json;
using Kind = CertificateError::Kind;

[[noreturn]] void malformed(const std::string& what) { throw CertificateError(Kind::kMalformedDocument, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) malformed(std::string("missing field '") + name + "'");
  return j.at(name);
}

Rational rational_field(const Json& j) {
  if (!j.is_string()) throw CertificateError(Kind::kMalformedRational, "rationals must be strings, got " + j.dump());
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const RationalParseError& e) {
    throw CertificateError(Kind::kMalformedRational, e.what());
  }
}

SmallGraph graph_field(const Json& j) {
  if (!j.is_string()) malformed("graph6 must be a string");
  try {
    return from_graph6(j.get<std::string>());
  } catch (const Graph6Error& e) {
    throw CertificateError(Kind::kMalformedGraph, e.what());
  }
}

SmallGraph triangle_free_graph(const Json& j) {
  SmallGraph g = graph_field(j);
  if (!is_triangle_free(g)) {
    throw CertificateError(Kind::kNotTriangleFree, "graph " + j.get<std::string>() + " is not triangle-free");
  }
  return g;
}

TypeSigma type_field(const Json& j) {
  SmallGraph g = triangle_free_graph(field(j, "graph6"));
  const Json& size = field(j, "size");
  if (!size.is_number_integer() || size.get<int>() != g.order()) {
    throw CertificateError(Kind::kLabelsMismatch, "type size does not match its graph");
  }
  return TypeSigma(std::move(g));
}

Flag flag_field(const Json& j, const TypeSigma& type) {
  const SmallGraph g = graph_field(field(j, "graph6"));
  const Json& labels = field(j, "labels");
  if (!labels.is_array()) malformed("flag labels must be an array");
  std::vector<int> theta;
  for (const auto& l : labels) {
    if (!l.is_number_integer()) malformed("flag labels must be integers");
    theta.push_back(l.get<int>());
  }
  if (static_cast<int>(theta.size()) != type.size()) {
    throw CertificateError(Kind::kLabelsMismatch, "flag has " + std::to_string(theta.size()) +
                                                      " labels for a type of size " + std::to_string(type.size()));
  }
  VertexMask labeled = 0;
  for (int v : theta) {
    if (v < 0 || v >= g.order() || ((labeled >> v) & 1U)) {
      throw CertificateError(Kind::kLabelsMismatch, "flag labels must be distinct vertex indices");
    }
    labeled |= VertexMask{1} << v;
  }
  if (g.induced(theta) != type.graph()) {
    throw CertificateError(Kind::kLabelsMismatch, "labeled vertices do not induce the block type");
  }
  if (!is_triangle_free(g)) {
    // An unlabeled vertex attached to both ends of a type edge is the common mistake.
    for (int v = 0; v < g.order(); ++v) {
      if ((labeled >> v) & 1U) continue;
      const VertexMask attached = g.neighbors(v) & labeled;
      bool closes_triangle = false;
      for (VertexMask m = attached; m != 0; m &= m - 1) {
        closes_triangle = closes_triangle || (g.neighbors(std::countr_zero(m)) & attached) != 0;
      }
      if (closes_triangle) {
        throw CertificateError(Kind::kNotIndependent, "V not independent: unlabeled vertex " +
                                                          std::to_string(v) + " closes a triangle with the type");
      }
    }
    throw CertificateError(Kind::kNotTriangleFree, "flag graph is not triangle-free");
  }
  return Flag::from_embedding(g, theta, type);
}

RationalMatrix matrix_field(const Json& j) {
  if (!j.is_array()) malformed("matrix must be an array of rows");
  RationalMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) malformed("matrix rows must be arrays");
    m.emplace_back();
    for (const auto& x : row) m.back().push_back(rational_field(x));
  }
  require_symmetric(m);
  return m;
}

Json graph_json(const SmallGraph& g) { return to_graph6(g); }

Json flag_json(const Flag& f) {
  Json labels = Json::array();
  for (int i = 0; i < f.type_size(); ++i) labels.push_back(i);
  return Json{{"graph6", to_graph6(f.underlying())}, {"labels", labels}};
}

}  // namespace

std::string save_certificate(const Certificate& cert) {
  Json doc;
  doc["theory"] = cert.theory;
  doc["level"] = cert.level;
  doc["bound"] = cert.bound.to_string();
  doc["target"] = {{"graph6", graph_json(cert.target)}, {"coefficient", cert.target_coefficient.to_string()}};
  Json linear = Json::array();
  for (const auto& t : cert.linear_terms) {
    linear.push_back({{"name", t.name}, {"graph6", graph_json(t.graph)}, {"coefficient", t.coefficient.to_string()}});
  }
  doc["linear_terms"] = linear;
  Json blocks = Json::array();
  for (const auto& b : cert.sos_blocks) {
    Json block;
    block["name"] = b.name;
    block["type"] = {{"graph6", to_graph6(b.type.graph())}, {"size", b.type.size()}};
    Json vec = Json::array();
    for (const auto& e : b.vector) {
      Json terms = Json::array();
      for (const auto& [f, c] : e.terms()) terms.push_back({{"flag", flag_json(f)}, {"coefficient", c.to_string()}});
      vec.push_back(terms);
    }
    block["vector"] = vec;
    Json matrix = Json::array();
    for (const auto& row : b.matrix) {
      Json r = Json::array();
      for (const auto& x : row) r.push_back(x.to_string());
      matrix.push_back(r);
    }
    block["matrix"] = matrix;
    blocks.push_back(block);
  }
  doc["sos_blocks"] = blocks;
  return doc.dump(2) + "\n";
}

Certificate load_certificate(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  Certificate cert;
  try {
    const Json& theory = field(doc, "theory");
    if (!theory.is_string() || theory.get<std::string>() != "triangle-free") {
      throw CertificateError(Kind::kUnsupportedTheory, "only the triangle-free theory is supported");
    }
    const Json& level = field(doc, "level");
    if (!level.is_number_integer()) malformed("level must be an integer");
    cert.level = level.get<int>();
    if (cert.level < 1 || cert.level > kMaxCertificateLevel) {
      throw CertificateError(Kind::kLevelOutOfRange, "level must be in 1.." + std::to_string(kMaxCertificateLevel));
    }
    cert.bound = rational_field(field(doc, "bound"));
    const Json& target = field(doc, "target");
    cert.target = canonical_form(triangle_free_graph(field(target, "graph6")));
    cert.target_coefficient = rational_field(field(target, "coefficient"));

    const Json& linear = field(doc, "linear_terms");
    if (!linear.is_array()) malformed("linear_terms must be an array");
    for (const auto& t : linear) {
      LinearTerm term;
      term.name = t.value("name", "");
      term.graph = canonical_form(triangle_free_graph(field(t, "graph6")));
      term.coefficient = rational_field(field(t, "coefficient"));
      cert.linear_terms.push_back(std::move(term));
    }

    const Json& blocks = field(doc, "sos_blocks");
    if (!blocks.is_array()) malformed("sos_blocks must be an array");
    for (const auto& b : blocks) {
      SosBlock block;
      block.name = b.value("name", "");
      block.type = type_field(field(b, "type"));
      const Json& vec = field(b, "vector");
      if (!vec.is_array()) malformed("block vector must be an array");
      for (const auto& entry : vec) {
        if (!entry.is_array()) malformed("vector entries must be term arrays");
        AlgebraElement e(block.type);
        for (const auto& term : entry) {
          e.add_term(flag_field(field(term, "flag"), block.type), rational_field(field(term, "coefficient")));
        }
        block.vector.push_back(std::move(e));
      }
      block.matrix = matrix_field(field(b, "matrix"));
      if (block.matrix.size() != block.vector.size()) {
        throw CertificateError(Kind::kDimensionMismatch, "matrix dimension differs from vector length");
      }
      cert.sos_blocks.push_back(std::move(block));
    }
  } catch (const Json::exception& e) {
    malformed(std::string("malformed certificate: ") + e.what());
  }
  return cert;
}

}  // namespace pentaflag
