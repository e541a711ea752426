#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tropqrt {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Scenario file is malformed: bad JSON, bad rational literal, or a
/// null coefficient in a slot that must be finite.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// A point that must lie on the bounded cycle of the curve does not.
/// Carries the offending point (as "x,y" text) and, when known, the
/// exponent pairs attaining the maximum there.
class NotOnCycleError : public Error {
public:
    NotOnCycleError(std::string point_text, std::vector<std::pair<int, int>> argmax,
                    const std::string& what)
        : Error(what), point_text_(std::move(point_text)), argmax_(std::move(argmax)) {}

    const std::string& point_text() const { return point_text_; }
    const std::vector<std::pair<int, int>>& argmax() const { return argmax_; }

private:
    std::string point_text_;
    std::vector<std::pair<int, int>> argmax_;
};

/// The cycle of the curve has an edge of non-positive lattice length;
/// the group law is undefined for these parameters.
class DegenerateCycleError : public Error {
public:
    DegenerateCycleError(int edge_index, const std::string& what)
        : Error(what), edge_index_(edge_index) {}

    int edge_index() const { return edge_index_; }

private:
    int edge_index_;
};

/// The exit-point formulas are only valid for vertices inside the closed
/// region where the (1,1) term of the curve is dominant.
class VertexOutsideRegionError : public Error {
public:
    explicit VertexOutsideRegionError(const std::string& what) : Error(what) {}
};

}  // namespace tropqrt
