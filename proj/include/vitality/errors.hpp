#pragma once

#include <stdexcept>
#include <string>

namespace vitality {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input / construction errors.
struct AsymmetricAdjacency : Error { using Error::Error; };
struct DisconnectedGraph : Error { using Error::Error; };
struct BadTerminals : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct EmbeddingInconsistent : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct CannotSatisfy : Error { using Error::Error; };

// Pipeline errors. These signal internal invariant violations; the pipeline
// aborts rather than returning a possibly wrong report.
struct OnlySharedFace : Error { using Error::Error; };
struct WedgeInconsistent : Error { using Error::Error; };
struct PairUnreachable : Error { using Error::Error; };
struct NotDegenerate : Error { using Error::Error; };
struct NoTightPath : Error { using Error::Error; };
struct FamilyInvariantViolation : Error { using Error::Error; };
struct VertexNotInForest : Error { using Error::Error; };
struct LabelInconsistency : Error { using Error::Error; };
struct ContractedEdgeQueried : Error { using Error::Error; };
struct OracleCapExceeded : Error { using Error::Error; };

}  // namespace vitality
