#pragma once

// Structured-text certificates: one "key: value" pair per line, lists as
// space-separated vertex ids, edges as "u-v". The first line names the kind:
//
//   certificate: wheel       center, rim, spokes
//   certificate: fan         origin, targets, size, path (one line each), ends
//   certificate: wm          x, targets, cutset, component (one per target)
//   certificate: end-block   fragment, attachment, block-vertices,
//                            marker-edges, block-graph6
//   certificate: cycle       vertices
//   certificate: coloring    palette, colors (indexed by vertex)
//   certificate: reduction-trace
//                            step (one per step, "low-degree vertex=v degree=d
//                            bound=b" or "twins removed=u kept=v")
//
// Keys with empty lists are written as "key:" with nothing after the colon.

#include <string>
#include <string_view>
#include <vector>

#include "wheelfree/connectivity.hpp"
#include "wheelfree/reduction.hpp"
#include "wheelfree/wheels.hpp"

namespace wheelfree {

class CertificateWriter {
 public:
  explicit CertificateWriter(std::string_view kind);

  CertificateWriter& field(std::string_view key, std::string_view value);
  CertificateWriter& field(std::string_view key, long long value);
  CertificateWriter& field(std::string_view key, const std::vector<Vertex>& values);
  CertificateWriter& field(std::string_view key, const VertexSet& values);
  CertificateWriter& field(std::string_view key, const std::vector<Edge>& values);

  const std::string& str() const { return text_; }

 private:
  std::string text_;
};

std::string render_certificate(const Wheel& w);
std::string render_certificate(const Fan& f);
std::string render_certificate(const WMCertificate& c);
std::string render_certificate(const EndBlock& b);
std::string render_certificate(const Cycle& c);
std::string render_certificate(const Coloring& c);
std::string render_certificate(const ReductionTrace& t);

/// "low-degree vertex=3 degree=2 bound=3" and friends.
std::string describe_witness(const ReductionWitness& w);

}  // namespace wheelfree
