#pragma once

#include <stdexcept>
#include <string>

namespace rigaug {

// Malformed input text. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A call was made with arguments that violate its contract.
class Precondition : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidPair : public Precondition {
public:
    using Precondition::Precondition;
};

class AlreadyEdge : public Precondition {
public:
    using Precondition::Precondition;
};

class NotConnected : public Precondition {
public:
    using Precondition::Precondition;
};

class EmptySet : public Precondition {
public:
    using Precondition::Precondition;
};

class NotBiconnected : public Precondition {
public:
    using Precondition::Precondition;
};

class CleavingPrecondition : public Precondition {
public:
    using Precondition::Precondition;
};

class NotDependent : public Precondition {
public:
    using Precondition::Precondition;
};

class NotTreeRepresentable : public Precondition {
public:
    using Precondition::Precondition;
};

class NotRigid : public Precondition {
public:
    using Precondition::Precondition;
};

// Instance exceeds a hard size guard of an exhaustive routine.
class TooLarge : public Precondition {
public:
    using Precondition::Precondition;
};

// The query only makes sense on instances outside the special cases the
// message names (e.g. leaf counting on a single-node tree).
class SpecialCase : public Precondition {
public:
    using Precondition::Precondition;
};

// Violation of an invariant the algorithms guarantee; indicates a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace rigaug
