#pragma once

#include <stdexcept>
#include <string>

namespace umc {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownGenerator : Error { using Error::Error; };
struct NotConfluent : Error { using Error::Error; };
struct IllDefinedMap : Error { using Error::Error; };
struct NotASubcomplex : Error { using Error::Error; };
struct TruncationTooLow : Error { using Error::Error; };
struct DegreeOutOfRange : Error { using Error::Error; };
struct NotAFunctor : Error { using Error::Error; };
struct DoesNotKillEndos : Error { using Error::Error; };
struct NoBasepoint : Error { using Error::Error; };
struct GNotAGroup : Error { using Error::Error; };
struct NotConnectedOrNotEquivalent : Error { using Error::Error; };
struct BadIsoFamily : Error { using Error::Error; };
struct EquivalenceViolated : Error { using Error::Error; };
struct InvalidInstance : Error { using Error::Error; };

// Budget exhausted before the length filtration stabilized.
struct CutoffOverflow : Error {
    long long cells;
    int cutoff;
    CutoffOverflow(long long cells_, int cutoff_)
        : Error("simplex budget exceeded at cutoff " + std::to_string(cutoff_) +
                " (" + std::to_string(cells_) + " cells)"),
          cells(cells_), cutoff(cutoff_) {}
};

// Theorem driver refuses actions whose hypothesis fails; carries the witness.
struct HypothesisFails : Error {
    int level, x, m;
    HypothesisFails(int level_, int x_, int m_, const std::string& detail)
        : Error("hypothesis fails at level " + std::to_string(level_) + ": " + detail),
          level(level_), x(x_), m(m_) {}
};

}  // namespace umc
