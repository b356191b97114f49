#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace trusslab {

/// Dense element index into a finite carrier, 0..n-1.
using Elem = int;

/// A concrete counterexample to a law: which law, and the tuple that broke it.
struct Witness {
    std::string law;
    std::vector<Elem> tuple;
};

/// Result of a law check. `sampled` is set when the scan was randomized
/// (carriers above the exhaustive-scan threshold).
struct Check {
    bool ok = true;
    std::optional<Witness> witness;
    bool sampled = false;

    static Check pass() { return {}; }
    static Check fail(std::string law, std::vector<Elem> tuple) {
        Check c;
        c.ok = false;
        c.witness = Witness{std::move(law), std::move(tuple)};
        return c;
    }
};

/// A named, witness-carrying failure. `kind` is a short machine-readable tag
/// ("not_associative", "no_identity", ...); `witness` holds the offending
/// elements when there are any.
struct Failure {
    std::string kind;
    std::vector<Elem> witness;
    std::string message;
};

/// Value-or-failure result for builders and validators.
template <typename T>
class Outcome {
  public:
    static Outcome success(T value) { return Outcome(std::move(value)); }
    static Outcome failure(Failure f) { return Outcome(std::move(f)); }
    static Outcome failure(std::string kind, std::vector<Elem> witness, std::string message) {
        return Outcome(Failure{std::move(kind), std::move(witness), std::move(message)});
    }

    bool ok() const { return std::holds_alternative<T>(v_); }
    explicit operator bool() const { return ok(); }

    const T& value() const& {
        require_ok();
        return std::get<T>(v_);
    }
    T& value() & {
        require_ok();
        return std::get<T>(v_);
    }
    T&& value() && {
        require_ok();
        return std::get<T>(std::move(v_));
    }
    const T& operator*() const& { return value(); }
    const T* operator->() const { return &value(); }

    const Failure& error() const {
        if (ok()) throw std::logic_error("Outcome::error() on a success value");
        return std::get<Failure>(v_);
    }

  private:
    explicit Outcome(T value) : v_(std::move(value)) {}
    explicit Outcome(Failure f) : v_(std::move(f)) {}

    void require_ok() const {
        if (!ok()) {
            const auto& f = std::get<Failure>(v_);
            throw std::logic_error("Outcome::value() on failure [" + f.kind + "] " + f.message);
        }
    }

    std::variant<T, Failure> v_;
};

}  // namespace trusslab
