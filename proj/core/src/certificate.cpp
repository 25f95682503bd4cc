#include "wheelfree/certificate.hpp"

#include "wheelfree/graph_io.hpp"

namespace wheelfree {

namespace {

std::string join(const std::vector<Vertex>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

CertificateWriter::CertificateWriter(std::string_view kind) { field("certificate", kind); }

CertificateWriter& CertificateWriter::field(std::string_view key, std::string_view value) {
  text_.append(key);
  text_.push_back(':');
  if (!value.empty()) {
    text_.push_back(' ');
    text_.append(value);
  }
  text_.push_back('\n');
  return *this;
}

CertificateWriter& CertificateWriter::field(std::string_view key, long long value) { return field(key, std::to_string(value)); }

CertificateWriter& CertificateWriter::field(std::string_view key, const std::vector<Vertex>& values) { return field(key, join(values)); }

CertificateWriter& CertificateWriter::field(std::string_view key, const VertexSet& values) { return field(key, values.to_vector()); }

CertificateWriter& CertificateWriter::field(std::string_view key, const std::vector<Edge>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += std::to_string(values[i].u) + "-" + std::to_string(values[i].v);
  }
  return field(key, out);
}

std::string render_certificate(const Wheel& w) {
  std::vector<Vertex> ends;
  for (const Edge& s : w.spokes) ends.push_back(s.v);
  return CertificateWriter("wheel").field("center", w.center).field("rim", w.rim).field("spokes", ends).str();
}

std::string render_certificate(const Fan& f) {
  CertificateWriter out("fan");
  out.field("origin", f.origin).field("targets", f.targets).field("size", static_cast<long long>(f.size()));
  for (const auto& p : f.paths) out.field("path", p);
  out.field("ends", f.ends());
  return out.str();
}

std::string render_certificate(const WMCertificate& c) {
  CertificateWriter out("wm");
  out.field("x", c.x).field("targets", c.targets).field("cutset", c.cutset);
  for (const auto& comp : c.components) out.field("component", comp);
  return out.str();
}

std::string render_certificate(const EndBlock& b) {
  CertificateWriter out("end-block");
  out.field("fragment", b.fragment).field("attachment", b.attachment).field("block-vertices", b.to_original).field("marker-edges", b.marker_edges);
  if (b.block.order() <= kGraph6MaxOrder) out.field("block-graph6", to_graph6(b.block));
  return out.str();
}

std::string render_certificate(const Cycle& c) { return CertificateWriter("cycle").field("vertices", c).str(); }

std::string render_certificate(const Coloring& c) {
  return CertificateWriter("coloring").field("palette", c.palette).field("colors", std::vector<Vertex>(c.colors.begin(), c.colors.end())).str();
}

std::string describe_witness(const ReductionWitness& w) {
  if (const auto* low = std::get_if<LowDegree>(&w)) {
    return "low-degree vertex=" + std::to_string(low->vertex) + " degree=" + std::to_string(low->degree) + " bound=" + std::to_string(low->bound);
  }
  if (const auto* twin = std::get_if<TwinPair>(&w)) {
    return "twins removed=" + std::to_string(twin->removed) + " kept=" + std::to_string(twin->kept);
  }
  return "stuck center=" + std::to_string(std::get<Stuck>(w).wheel.center);
}

std::string render_certificate(const ReductionTrace& t) {
  CertificateWriter out("reduction-trace");
  for (const auto& step : t) out.field("step", describe_witness(step.witness));
  return out.str();
}

}  // namespace wheelfree
