#ifndef IRRSPEC_ERROR_HPP
#define IRRSPEC_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace irrspec {

enum class Errc {
    NonPrime,
    Overflow,
    CtxMismatch,
    ZeroModulus,
    ConstantInput,
    ZeroInput,
    DomainMismatch,
    CapExceeded,
    PointOutOfRange,
    BlockNotStable,
    BadOrbitSize,
    KernelNotContained,
    NoUniformSampler,
    NoWeakSolution,
    PreconditionFailed,
    EvenNCharTwo,
    BadShapes,
    NoAcceptedSamples,
    NotCoprime,
    SearchExhausted,
    SmoothnessInconclusive,
    NotSymmetric,
    Degenerate,
    EmptyInput,
    IoError,
    ParseError,
    InvalidArgument,
    InternalError,
};

constexpr std::string_view to_string(Errc e) noexcept {
    switch (e) {
        case Errc::NonPrime: return "NonPrime";
        case Errc::Overflow: return "Overflow";
        case Errc::CtxMismatch: return "CtxMismatch";
        case Errc::ZeroModulus: return "ZeroModulus";
        case Errc::ConstantInput: return "ConstantInput";
        case Errc::ZeroInput: return "ZeroInput";
        case Errc::DomainMismatch: return "DomainMismatch";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::PointOutOfRange: return "PointOutOfRange";
        case Errc::BlockNotStable: return "BlockNotStable";
        case Errc::BadOrbitSize: return "BadOrbitSize";
        case Errc::KernelNotContained: return "KernelNotContained";
        case Errc::NoUniformSampler: return "NoUniformSampler";
        case Errc::NoWeakSolution: return "NoWeakSolution";
        case Errc::PreconditionFailed: return "PreconditionFailed";
        case Errc::EvenNCharTwo: return "EvenNCharTwo";
        case Errc::BadShapes: return "BadShapes";
        case Errc::NoAcceptedSamples: return "NoAcceptedSamples";
        case Errc::NotCoprime: return "NotCoprime";
        case Errc::SearchExhausted: return "SearchExhausted";
        case Errc::SmoothnessInconclusive: return "SmoothnessInconclusive";
        case Errc::NotSymmetric: return "NotSymmetric";
        case Errc::Degenerate: return "Degenerate";
        case Errc::EmptyInput: return "EmptyInput";
        case Errc::IoError: return "IoError";
        case Errc::ParseError: return "ParseError";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::InternalError: return "InternalError";
    }
    return "Unknown";
}

/// Exception type thrown by every operation in the library. `code()` names
/// the failure; `count()` carries the partial element count for CapExceeded.
class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what, std::uint64_t count = 0)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), count_(count) {}

    Errc code() const noexcept { return code_; }
    std::uint64_t count() const noexcept { return count_; }

   private:
    Errc code_;
    std::uint64_t count_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what, std::uint64_t count = 0) {
    throw Error(code, what, count);
}

}  // namespace irrspec

#endif  // IRRSPEC_ERROR_HPP
