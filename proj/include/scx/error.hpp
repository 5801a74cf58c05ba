#pragma once

#include <stdexcept>
#include <string>

namespace scx {

enum class Errc {
    VoidComplex,
    NotPure,
    ApexCollision,
    FaceAbsent,
    EmptyFace,
    EvenDimension,
    Overflow,
    InvalidCertificate,
    InvariantBroken,
    BadLabel,
    BadParameter,
    ParseError,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::VoidComplex: return "VoidComplex";
        case Errc::NotPure: return "NotPure";
        case Errc::ApexCollision: return "ApexCollision";
        case Errc::FaceAbsent: return "FaceAbsent";
        case Errc::EmptyFace: return "EmptyFace";
        case Errc::EvenDimension: return "EvenDimension";
        case Errc::Overflow: return "Overflow";
        case Errc::InvalidCertificate: return "InvalidCertificate";
        case Errc::InvariantBroken: return "InvariantBroken";
        case Errc::BadLabel: return "BadLabel";
        case Errc::BadParameter: return "BadParameter";
        case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

/// Exception thrown by operations with a named error contract.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace scx
