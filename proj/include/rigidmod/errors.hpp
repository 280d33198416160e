#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rigidmod {

// All domain errors carry a stable module-qualified code such as
// "root_data.InvalidRank"; the CLI prints the code verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct InvalidRank : Error {
    explicit InvalidRank(const std::string& w) : Error("root_data.InvalidRank", w) {}
};

struct ZeroLeadingTerm : Error {
    explicit ZeroLeadingTerm(const std::string& w) : Error("qseries.ZeroLeadingTerm", w) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& w) : Error("eta.DomainError", w) {}
};

struct NotInGamma0 : Error {
    explicit NotInGamma0(const std::string& w) : Error("eta.NotInGamma0", w) {}
};

struct ParityError : Error {
    explicit ParityError(const std::string& w) : Error("quiver.ParityError", w) {}
};

struct StabilizerNotDividing : Error {
    explicit StabilizerNotDividing(const std::string& w)
        : Error("global.StabilizerNotDividing", w) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error("cli.ParseError", w) {}
};

}  // namespace rigidmod
