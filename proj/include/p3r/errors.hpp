#ifndef P3R_ERRORS_HPP
#define P3R_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace p3r {

// All numeric failures carry a short machine-readable kind (stable across
// messages) so the CLI can report it on exit code 3.
class NumericError : public std::runtime_error {
public:
    NumericError(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }
private:
    std::string kind_;
};

#define P3R_DEFINE_ERROR(Name)                                   \
    class Name : public NumericError {                           \
    public:                                                      \
        explicit Name(const std::string& what)                   \
            : NumericError(#Name, what) {}                       \
    }

P3R_DEFINE_ERROR(NonConvergence);
P3R_DEFINE_ERROR(SingularJacobian);
P3R_DEFINE_ERROR(InexactDivision);
P3R_DEFINE_ERROR(PoleAt);
P3R_DEFINE_ERROR(OnBranchCut);
P3R_DEFINE_ERROR(OnCut);
P3R_DEFINE_ERROR(BracketFailure);
P3R_DEFINE_ERROR(DegenerateCurve);
P3R_DEFINE_ERROR(ContinuationStall);
P3R_DEFINE_ERROR(OutsideDomain);
P3R_DEFINE_ERROR(HalfIntegerM);
P3R_DEFINE_ERROR(PathBlocked);
P3R_DEFINE_ERROR(StencilOutsideDomain);
P3R_DEFINE_ERROR(DivergentParameter);
P3R_DEFINE_ERROR(UsageError);

#undef P3R_DEFINE_ERROR

} // namespace p3r

#endif
