#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace sojourn {

enum class Sign { plus, minus };

/// Endpoint constraint F for the joint law P{T_n = k, S_n in F}:
/// the whole line, {0}, the positive/negative half-lines, or a single
/// nonzero level.
class Conditioning {
  public:
    enum class Kind { free, bridge, positive, negative, pinned };

    static Conditioning free() { return Conditioning(Kind::free, 0); }
    static Conditioning bridge() { return Conditioning(Kind::bridge, 0); }
    static Conditioning positive() { return Conditioning(Kind::positive, 0); }
    static Conditioning negative() { return Conditioning(Kind::negative, 0); }
    static Conditioning pinned(long j) {
        if (j == 0)
            throw std::domain_error("Conditioning::pinned: endpoint 0 is the bridge");
        return Conditioning(Kind::pinned, j);
    }

    Kind kind() const { return kind_; }
    long pin() const { return pin_; }

    bool contains(long endpoint) const {
        switch (kind_) {
            case Kind::free: return true;
            case Kind::bridge: return endpoint == 0;
            case Kind::positive: return endpoint > 0;
            case Kind::negative: return endpoint < 0;
            case Kind::pinned: return endpoint == pin_;
        }
        return false;
    }

    /// Stable text tag, also accepted back by parse(): "free", "bridge",
    /// "positive", "negative", "pinned:<j>".
    std::string tag() const {
        switch (kind_) {
            case Kind::free: return "free";
            case Kind::bridge: return "bridge";
            case Kind::positive: return "positive";
            case Kind::negative: return "negative";
            case Kind::pinned: return "pinned:" + std::to_string(pin_);
        }
        return "";
    }

    static std::optional<Conditioning> parse(const std::string& text) {
        if (text == "free") return free();
        if (text == "bridge") return bridge();
        if (text == "positive") return positive();
        if (text == "negative") return negative();
        const std::string prefix = "pinned:";
        if (text.rfind(prefix, 0) == 0) {
            try {
                size_t used = 0;
                long j = std::stol(text.substr(prefix.size()), &used);
                if (used != text.size() - prefix.size()) return std::nullopt;
                if (j == 0) return std::nullopt;  // pinned:0 is the bridge, rejected
                return pinned(j);
            } catch (const std::invalid_argument&) {
                return std::nullopt;
            } catch (const std::out_of_range&) {
                return std::nullopt;
            }
        }
        return std::nullopt;
    }

    bool operator==(const Conditioning& other) const {
        return kind_ == other.kind_ && pin_ == other.pin_;
    }

  private:
    Conditioning(Kind kind, long pin) : kind_(kind), pin_(pin) {}
    Kind kind_;
    long pin_;
};

}  // namespace sojourn
