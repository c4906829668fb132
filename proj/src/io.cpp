#include "opclass/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace opclass {

using nlohmann::json;

namespace {

json vector_to_json(const ComplexVector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    arr.push_back(json::array({v(i).real(), v(i).imag()}));
  return arr;
}

json matrix_node(const ComplexMatrix& m) {
  json node;
  node["rows"] = m.rows();
  node["cols"] = m.cols();
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      data.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
  node["data"] = std::move(data);
  return node;
}

double number_field(const json& node, const char* what) {
  if (!node.is_number())
    throw input_error(std::string("expected a number for ") + what);
  double v = node.get<double>();
  if (!std::isfinite(v))
    throw input_error(std::string("non-finite value for ") + what);
  return v;
}

ComplexMatrix matrix_from_node(const json& node) {
  if (!node.is_object()) throw input_error("matrix: expected a JSON object");
  if (!node.contains("rows") || !node.contains("cols") || !node.contains("data"))
    throw input_error("matrix: need fields rows, cols, data");
  if (!node["rows"].is_number_integer() || !node["cols"].is_number_integer())
    throw input_error("matrix: rows and cols must be integers");
  long long rows = node["rows"].get<long long>();
  long long cols = node["cols"].get<long long>();
  if (rows < 0 || cols < 0 || rows > 100000 || cols > 100000)
    throw input_error("matrix: rows/cols out of range");
  const json& data = node["data"];
  if (!data.is_array() ||
      static_cast<long long>(data.size()) != rows * cols)
    throw input_error("matrix: data must hold rows*cols entries");
  ComplexMatrix m(rows, cols);
  long long idx = 0;
  for (long long i = 0; i < rows; ++i)
    for (long long j = 0; j < cols; ++j, ++idx) {
      const json& e = data[idx];
      if (!e.is_array() || e.size() != 2)
        throw input_error("matrix: each entry must be an [re, im] pair");
      m(i, j) = Complex(number_field(e[0], "matrix entry"),
                        number_field(e[1], "matrix entry"));
    }
  return m;
}

json parse_or_throw(const std::string& text, const char* what) {
  json node = json::parse(text, nullptr, false);
  if (node.is_discarded())
    throw input_error(std::string(what) + ": malformed JSON");
  return node;
}

json tristate_node(TriState s) { return std::string(to_string(s)); }

json cluster_list(const std::vector<Cluster>& cs) {
  json arr = json::array();
  for (const Cluster& c : cs)
    arr.push_back({{"center", c.center}, {"multiplicity", c.multiplicity}});
  return arr;
}

json cert_node(const PencilCertificate& c) {
  json node;
  node["kind"] = to_string(c.kind);
  node["k_max"] = c.k_max;
  node["grid_step"] = c.grid_step;
  node["min_value"] = c.min_value;
  node["argmin_k"] = c.argmin_k;
  node["lower_bound"] = c.lower_bound;
  node["lipschitz_bound"] = c.lipschitz_bound;
  node["witness"] = vector_to_json(c.witness);
  node["verdict"] = to_string(c.verdict);
  node["evaluations"] = c.evaluations;
  return node;
}

std::string dump(const json& node) { return node.dump(2) + "\n"; }

}  // namespace

ComplexMatrix parse_matrix_json(const std::string& text) {
  return matrix_from_node(parse_or_throw(text, "matrix"));
}

ComplexMatrix read_matrix_json(const std::string& path) {
  return parse_matrix_json(read_text_file(path));
}

std::string matrix_to_json(const ComplexMatrix& m) {
  return dump(matrix_node(m));
}

void write_matrix_json(const std::string& path, const ComplexMatrix& m) {
  write_text_file(path, matrix_to_json(m));
}

SymbolSpec parse_symbol_json(const std::string& text) {
  json node = parse_or_throw(text, "symbol");
  if (!node.is_object() || !node.contains("coeffs") || !node["coeffs"].is_array())
    throw input_error("symbol: need a coeffs array");
  SymbolSpec s;
  for (const json& e : node["coeffs"]) {
    if (!e.is_object() || !e.contains("n") || !e.contains("re") ||
        !e.contains("im") || !e["n"].is_number_integer())
      throw input_error("symbol: each coefficient needs integer n and re, im");
    int n = e["n"].get<int>();
    if (s.coeffs.count(n))
      throw input_error("symbol: repeated exponent " + std::to_string(n));
    Complex c(number_field(e["re"], "coefficient"),
              number_field(e["im"], "coefficient"));
    if (c != Complex(0, 0)) s.coeffs[n] = c;
  }
  return s;
}

SymbolSpec read_symbol_json(const std::string& path) {
  return parse_symbol_json(read_text_file(path));
}

std::string symbol_to_json(const SymbolSpec& s) {
  json arr = json::array();
  for (const auto& [n, c] : s.coeffs)
    arr.push_back({{"im", c.imag()}, {"n", n}, {"re", c.real()}});
  json node;
  node["coeffs"] = std::move(arr);
  return dump(node);
}

void write_symbol_json(const std::string& path, const SymbolSpec& s) {
  write_text_file(path, symbol_to_json(s));
}

std::string to_json_text(const PencilCertificate& c) {
  return dump(cert_node(c));
}

std::string to_json_text(const ClassReport& r) {
  json node;
  node["dim"] = r.dim;
  if (r.window)
    node["window"] = *r.window;
  else
    node["window"] = nullptr;
  node["norm"] = r.norm;
  node["commutator"] = r.commutator;
  node["normal"] = tristate_node(r.normal);
  node["self_adjoint"] = tristate_node(r.self_adjoint);
  node["positive"] = tristate_node(r.positive);
  node["unitary"] = tristate_node(r.unitary);
  node["isometry_multiple"] = tristate_node(r.isometry_multiple);
  node["hyponormal"] = tristate_node(r.hyponormal);
  node["paranormal"] = tristate_node(r.paranormal);
  node["star_paranormal"] = tristate_node(r.star_paranormal);
  node["isometry_scale"] = r.isometry_scale;
  node["hypo_margin"] = r.hypo_margin;
  node["hypo_witness"] =
      r.hypo_witness ? vector_to_json(*r.hypo_witness) : json(nullptr);
  node["para_witness"] =
      r.para_witness ? vector_to_json(*r.para_witness) : json(nullptr);
  node["star_witness"] =
      r.star_witness ? vector_to_json(*r.star_witness) : json(nullptr);
  node["para_certificate"] =
      r.para_certificate ? cert_node(*r.para_certificate) : json(nullptr);
  node["star_certificate"] =
      r.star_certificate ? cert_node(*r.star_certificate) : json(nullptr);
  return dump(node);
}

std::string to_json_text(const BlockDecomposition& d, const BlockCheckReport& r) {
  json node;
  node["lambda"] = d.lambda;
  node["lambda_auto"] = d.lambda_auto;
  node["lambda_degenerate"] = d.lambda_degenerate;
  node["adjoint_form"] = d.adjoint_form;
  node["alphas"] = d.alphas;
  node["alpha_mults"] = d.alpha_mults;
  node["dims"] = {{"h0", d.basis_h0.cols()},
                  {"h1", d.basis_h1.cols()},
                  {"h2", d.basis_h2.cols()}};
  node["basis_h0"] = matrix_node(d.basis_h0);
  node["basis_h1"] = matrix_node(d.basis_h1);
  node["basis_h2"] = matrix_node(d.basis_h2);
  node["conjugated"] = matrix_node(d.conjugated);
  node["v0"] = matrix_node(d.v0);
  node["v"] = matrix_node(d.v);
  node["a"] = matrix_node(d.a);
  node["b"] = matrix_node(d.b);
  json chk;
  chk["zero_12"] = r.zero_12;
  chk["zero_13"] = r.zero_13;
  chk["zero_21"] = r.zero_21;
  chk["zero_31"] = r.zero_31;
  chk["zero_off"] = r.zero_off;
  chk["v0_structure"] = r.v0_structure;
  chk["v_isometry"] = r.v_isometry;
  chk["vstar_a"] = r.vstar_a;
  chk["contraction"] = r.contraction;
  chk["b_norm_excess"] = r.b_norm_excess;
  chk["reassembly"] = r.reassembly;
  chk["zero_ok"] = r.zero_ok;
  chk["v0_ok"] = r.v0_ok;
  chk["v_ok"] = r.v_ok;
  chk["vstar_a_ok"] = r.vstar_a_ok;
  chk["contraction_ok"] = r.contraction_ok;
  chk["b_norm_ok"] = r.b_norm_ok;
  chk["reassembly_ok"] = r.reassembly_ok;
  chk["all_ok"] = r.all_ok;
  node["check"] = std::move(chk);
  return dump(node);
}

std::string to_json_text(const HypoBlockReport& r) {
  json node;
  node["res1"] = r.res1;
  node["res2"] = r.res2;
  node["pass1"] = r.pass1;
  node["pass2"] = r.pass2;
  return dump(node);
}

namespace {

json diagram_node(const SpectrumDiagram& d) {
  json node;
  node["values"] = d.values;
  node["clusters"] = cluster_list(d.clusters);
  node["essential"] = d.essential ? json(*d.essential) : json(nullptr);
  node["above"] = d.above;
  node["below"] = d.below;
  node["norm"] = d.norm;
  node["min_mod"] = d.min_mod;
  return node;
}

}  // namespace

// satisfies the forward declaration used by diagram_emit
std::string diagram_emit_json(const SpectrumDiagram& d) {
  return dump(diagram_node(d));
}

std::string to_json_text(const SpectrumDiagram& d) {
  return diagram_emit_json(d);
}

SpectrumDiagram diagram_from_json(const std::string& text) {
  json node = parse_or_throw(text, "diagram");
  if (!node.is_object()) throw input_error("diagram: expected a JSON object");
  SpectrumDiagram d;
  try {
    d.values = node.at("values").get<std::vector<double>>();
    for (const json& c : node.at("clusters"))
      d.clusters.push_back({c.at("center").get<double>(),
                            c.at("multiplicity").get<int>()});
    if (!node.at("essential").is_null())
      d.essential = node.at("essential").get<double>();
    d.above = node.at("above").get<std::vector<double>>();
    d.below = node.at("below").get<std::vector<double>>();
    d.norm = node.at("norm").get<double>();
    d.min_mod = node.at("min_mod").get<double>();
  } catch (const json::exception& e) {
    throw input_error(std::string("diagram: ") + e.what());
  }
  return d;
}

std::string to_json_text(const EssentialCandidate& e) {
  json node;
  node["lambda"] = e.lambda;
  node["singleton"] = e.singleton;
  node["hermitian_mode"] = e.hermitian_mode;
  json per = json::array();
  for (const SizeClusters& sc : e.per_size)
    per.push_back({{"clusters", cluster_list(sc.clusters)}, {"size", sc.size}});
  node["per_size"] = std::move(per);
  json tracks = json::array();
  for (const ClusterTrack& tr : e.tracks)
    tracks.push_back({{"center", tr.center},
                      {"growing", tr.growing},
                      {"mults", tr.mults},
                      {"slope", tr.slope}});
  node["tracks"] = std::move(tracks);
  return dump(node);
}

std::string to_json_text(const ToeplitzReport& r) {
  json node;
  node["window"] = r.window;
  node["ambient"] = r.ambient;
  node["isometry"] = {{"c", r.isometry.c},
                      {"residual", r.isometry.residual},
                      {"verdict", to_string(r.isometry.verdict)}};
  node["star_paranormal"] = {{"margin", r.star.margin},
                             {"verdict", to_string(r.star.verdict)}};
  node["predicted"] = r.predicted;
  node["consistent"] = r.consistent;
  return dump(node);
}

std::string to_json_text(const HankelReport& r) {
  json node;
  node["window"] = r.window;
  node["normal"] = {{"margin", r.normal.margin},
                    {"verdict", to_string(r.normal.verdict)}};
  node["star_paranormal"] = {{"margin", r.star.margin},
                             {"verdict", to_string(r.star.verdict)}};
  node["predicted"] = r.predicted;
  node["consistent"] = r.consistent;
  return dump(node);
}

std::string to_json_text(const OracleResult& r, const std::string& slack_name) {
  json node;
  node["slack"] = slack_name;
  node["min_slack"] = r.min_slack;
  node["argmin"] = vector_to_json(r.argmin);
  node["samples"] = r.samples;
  node["seed"] = r.seed;
  return dump(node);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write file: " + path);
  out << content;
  if (!out) throw input_error("write failed: " + path);
}

}  // namespace opclass
