#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ddrep/datum.hpp"
#include "ddrep/matrix.hpp"

namespace ddrep {

struct WeightDecomposition {
    std::vector<Weight> weights;     // sorted, one per nonzero weight space
    std::vector<size_t> block_start; // column offset of each weight block in `basis`
    std::vector<size_t> block_dim;
    Matrix basis;                    // columns: weight vectors grouped by weight
    Matrix basis_inv;
    Matrix x_w, xi_w;                // x and xi in the weight basis
    std::vector<size_t> weight_of_col;
    bool diagonal = false;           // original basis already consists of weight vectors

    std::optional<size_t> find(const Weight& w) const;
    // Basis (in original coordinates) of the weight space of w; empty if absent.
    Matrix space(const Weight& w) const;
};

// Finite-dimensional module: matrices of the cyclic generators of G and Gamma, x and xi.
class ModuleRep {
public:
    ModuleRep() = default;
    ModuleRep(std::shared_ptr<const GroupDatum> D, std::vector<std::string> labels, std::vector<Matrix> group,
              std::vector<Matrix> gamma, Matrix x, Matrix xi);

    const GroupDatum& datum() const { return *p_->datum; }
    const std::shared_ptr<const GroupDatum>& datum_ptr() const { return p_->datum; }
    size_t dim() const { return p_->dim; }
    const std::vector<std::string>& labels() const { return p_->labels; }
    const std::vector<Matrix>& group_mats() const { return p_->group; }
    const std::vector<Matrix>& gamma_mats() const { return p_->gamma; }
    const Matrix& x() const { return p_->x; }
    const Matrix& xi() const { return p_->xi; }

    // All generator matrices: group gens, Gamma gens, x, xi.
    std::vector<const Matrix*> generators() const;

    // Matrix of a group element / of a character viewed as an element of Gamma.
    Matrix group_element_matrix(const GroupElem& g) const;
    Matrix gamma_element_matrix(const std::vector<int>& exps) const;

    const WeightDecomposition& weights() const;

private:
    struct Impl {
        std::shared_ptr<const GroupDatum> datum;
        size_t dim = 0;
        std::vector<std::string> labels;
        std::vector<Matrix> group, gamma;
        Matrix x, xi;
        mutable std::once_flag weights_once;
        mutable std::unique_ptr<WeightDecomposition> weights;
    };
    std::shared_ptr<Impl> p_;
};

ModuleRep zero_module(std::shared_ptr<const GroupDatum> D);

struct RelationVerdict {
    std::string name;
    bool holds = true;
    std::optional<size_t> witness_index;  // basis vector on which the identity fails
    Vec witness;                          // (lhs - rhs) applied to that basis vector
};

struct RelationReport {
    std::vector<RelationVerdict> items;
    bool all_hold() const;
    std::vector<std::string> failures() const;
};

RelationReport verify_relations(const ModuleRep& M);
// Throws InternalInconsistency naming the failed relations.
void require_relations(const ModuleRep& M, const std::string& what);

std::vector<std::pair<Weight, Matrix>> weight_spaces(const ModuleRep& M);

enum class Letter { Group, Gamma, X, Xi };
struct WordLetter {
    Letter kind;
    size_t index = 0;  // generator index for Group / Gamma
    unsigned power = 1;
};
// Applies the letters in order: the first letter acts first.
Vec apply_word(const ModuleRep& M, const std::vector<WordLetter>& word, const Vec& v);

struct Submodule {
    ModuleRep module;
    Matrix inclusion;  // dim(M) x dim(sub)
};

struct Quotient {
    ModuleRep module;
    Matrix projection;  // dim(Q) x dim(M)
    Matrix lift;        // dim(M) x dim(Q): the chosen complement basis, projection * lift = I
};

Submodule spin_submodule(const ModuleRep& M, const std::vector<Vec>& S);
// Restriction to the span of the given independent columns; throws if that span is not invariant.
Submodule restrict_to_subspace(const ModuleRep& M, const Matrix& basis, std::vector<std::string> labels = {});
Quotient quotient_module(const ModuleRep& M, const Matrix& sub_basis);
ModuleRep direct_sum(const std::vector<ModuleRep>& parts);
Matrix x_kernel(const ModuleRep& M);
Matrix xi_kernel(const ModuleRep& M);

// Checks F * gen_M = gen_N * F for every generator.
bool is_intertwiner(const ModuleRep& M, const ModuleRep& N, const Matrix& F);

}  // namespace ddrep
