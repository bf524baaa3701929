#ifndef DH_ERRORS_HPP
#define DH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dh {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DisconnectedGraph : Error {
    DisconnectedGraph() : Error("graph is disconnected") {}
    explicit DisconnectedGraph(const std::string& what) : Error(what) {}
};

struct NotDistanceHereditary : Error {
    NotDistanceHereditary() : Error("graph is not distance-hereditary") {}
    explicit NotDistanceHereditary(const std::string& what) : Error(what) {}
};

struct BadParameter : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    using Error::Error;
};

struct EmptyCertificate : Error {
    EmptyCertificate() : Error("certificate set is empty") {}
};

struct InvalidCenterShape : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line = 0;
    ParseError(int line_, const std::string& what) : Error(what), line(line_) {}
};

struct SelfLoop : Error {
    explicit SelfLoop(int v) : Error("self-loop at vertex " + std::to_string(v)), vertex(v) {}
    int vertex;
};

struct DuplicateEdge : Error {
    DuplicateEdge(int u_, int v_)
        : Error("duplicate edge " + std::to_string(u_) + " " + std::to_string(v_)), u(u_), v(v_) {}
    int u, v;
};

}  // namespace dh

#endif
