#pragma once
#include <stdexcept>
#include <string>

namespace cpg {

// Input/validation failures carry a machine-checkable kind (the class) plus
// a human message. Everything derives from Error so CLI code can map the
// whole family to exit code 2.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// graph construction
struct NonCubic : Error { using Error::Error; };
struct Disconnected : Error { using Error::Error; };
struct BadPairing : Error { using Error::Error; };
struct EulerMismatch : Error { using Error::Error; };

// coefficient arithmetic
struct NotAUnit : Error { using Error::Error; };
struct ZeroAssignment : Error { using Error::Error; };

// geometric garden builder
struct NotStarShaped : Error { using Error::Error; };
struct DegenerateEmbedding : Error { using Error::Error; };
struct ExteriorRoutingFailure : Error { using Error::Error; };

// moves / invariance machinery
struct BadGeneralizedTine : Error { using Error::Error; };
struct BridgePresent : Error { using Error::Error; };
struct SingularA : Error { using Error::Error; };

// coloring correspondence
struct NoFreeColor : Error { using Error::Error; };
struct PropagationClash : Error { using Error::Error; };

}  // namespace cpg
