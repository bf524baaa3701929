#ifndef DH_CERTIFICATES_HPP
#define DH_CERTIFICATES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dh/graph.hpp"

namespace dh {

// e_L(v) = max over x in L of d(v,x); a lower bound on e(v).
std::vector<int> eval_lower(const Graph& g, const std::vector<int>& L);

// e^U(v) = min over x in U of d(v,x) + ecc[x]; an upper bound on e(v).
// `ecc` is indexed by vertex id and must be exact on U.
std::vector<int> eval_upper(const Graph& g, const std::vector<int>& U,
                            const std::vector<int>& ecc);

enum class CertificateKind { lower, upper, radius, diameter, tight_upper };
const char* certificate_kind_name(CertificateKind k);

struct CertificateReport {
    CertificateKind kind = CertificateKind::radius;
    std::vector<int> cert_set;
    std::vector<int> values;  // e_L or e^U per vertex
    bool pass = false;
    int witness = -1;  // violating vertex when !pass
};

// radius: every vertex has e_L(v) >= rad.
CertificateReport verify_radius_certificate(const Graph& g,
                                            const std::vector<int>& L,
                                            const EccTable& ecc);
// diameter: every vertex has e^U(v) <= diam.
CertificateReport verify_diameter_certificate(const Graph& g,
                                              const std::vector<int>& U,
                                              const EccTable& ecc);
// tight-upper: e^U(v) = e(v) everywhere.
CertificateReport verify_tight_upper(const Graph& g, const std::vector<int>& U,
                                     const EccTable& ecc);

struct CertificateAuditReport {
    bool holds = true;
    int witness = -1;
    std::string detail;
};

// For every non-central v and every furthest u from v there is a vertex
// w of C^1(G) on a shortest (v,u)-path with u furthest from w as well;
// the same holds with C(G) when diam < 2rad. Oracle-scale.
CertificateAuditReport path_to_furthest_audit(const Graph& g,
                                              const EccTable& ecc);

// Seeded search over small random connected graphs for one where the
// diametral set fails as a radius certificate and the center fails as a
// diameter certificate (possible off the distance-hereditary class).
Graph find_certificate_counterexample(std::uint64_t seed);

}  // namespace dh

#endif
