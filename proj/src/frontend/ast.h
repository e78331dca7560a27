#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "common/error.h"
#include "common/value.h"

namespace aoc {

enum class UnaryOp {
  kBitNot,
  kLogicalNot,
  kReduceAnd,
  kReduceOr,
  kReduceXor,
  kNegate,
};

enum class BinaryOp {
  kAdd,
  kSub,
  kMul,
  kDiv,
  kMod,
  kBitAnd,
  kBitOr,
  kBitXor,
  kLogicalAnd,
  kLogicalOr,
  kEq,
  kNe,
  kLt,
  kLe,
  kGt,
  kGe,
  kShl,
  kShr,
};

enum class ExprKind {
  kNumber,
  kIdent,
  kUnary,
  kBinary,
  kTernary,
  kConcat,
  kIndex,
  kSlice,
  kCall,
};

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  ExprKind kind;
  SourceLoc loc;

  // kNumber: value as written; width 0 with sized=false means unsized.
  Value number{1, 0};
  uint32_t number_width = 0;
  bool sized = false;

  std::string name;  // kIdent, kCall

  UnaryOp un = UnaryOp::kBitNot;
  BinaryOp bin = BinaryOp::kAdd;

  // kUnary: ops[0]; kBinary: ops[0], ops[1]; kTernary: cond, then, else;
  // kConcat: parts (MSB first); kIndex: base, index; kSlice: base, msb, lsb;
  // kCall: arguments.
  std::vector<ExprPtr> ops;
};

ExprPtr MakeNumber(SourceLoc loc, Value v, uint32_t width, bool sized);
ExprPtr MakeIdent(SourceLoc loc, std::string name);

enum class StmtKind {
  kBlock,
  kIf,
  kCase,
  kBlockingAssign,
  kNonblockingAssign,
  kDelay,
  kWaitChange,
  kForever,
  kFinish,
  kDisplay,
};

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct CaseItem {
  std::vector<ExprPtr> labels;  // empty => default
  StmtPtr body;
};

struct Stmt {
  StmtKind kind;
  SourceLoc loc;

  std::vector<StmtPtr> stmts;  // kBlock, kForever(single child in stmts[0])

  ExprPtr cond;  // kIf condition, kCase selector
  StmtPtr then_stmt;
  StmtPtr else_stmt;
  std::vector<CaseItem> case_items;

  ExprPtr lhs;  // assigns
  ExprPtr rhs;

  ExprPtr delay;                      // kDelay amount
  std::vector<ExprPtr> wait_signals;  // kWaitChange

  std::string display_format;  // kDisplay
  std::vector<ExprPtr> display_args;
};

enum class PortDir { kInput, kOutput };

struct Dim {
  ExprPtr msb;
  ExprPtr lsb;
};

struct PortDecl {
  std::string name;
  PortDir dir = PortDir::kInput;
  ExprPtr msb;  // packed range; null => 1 bit
  ExprPtr lsb;
  bool is_reg = false;
  bool declared = false;  // direction seen (non-ANSI lists start undeclared)
  SourceLoc loc;
};

struct NetDecl {
  std::string name;
  bool is_reg = false;
  ExprPtr msb;
  ExprPtr lsb;
  std::vector<Dim> dims;  // unpacked dimensions, at most 2
  ExprPtr init;           // optional declaration initializer (reg only)
  SourceLoc loc;
};

struct ParamDecl {
  std::string name;
  ExprPtr value;
  SourceLoc loc;
};

struct ContAssign {
  ExprPtr lhs;
  ExprPtr rhs;
  SourceLoc loc;
};

enum class EdgeKind { kPosedge, kNegedge, kComb };

struct AlwaysBlock {
  EdgeKind edge = EdgeKind::kComb;
  std::string clock_name;
  SourceLoc clock_loc;
  StmtPtr body;
  SourceLoc loc;
};

struct InitialBlock {
  StmtPtr body;
  SourceLoc loc;
};

struct PortConn {
  std::string name;  // empty => positional
  ExprPtr expr;      // null => explicitly unconnected .name()
  SourceLoc loc;
};

struct Instance {
  std::string module_name;
  std::string inst_name;
  std::vector<PortConn> param_overrides;
  std::vector<PortConn> ports;
  SourceLoc loc;
};

struct FunctionDef {
  std::string name;
  ExprPtr msb;  // return range
  ExprPtr lsb;
  std::vector<NetDecl> inputs;  // in declaration order
  std::vector<NetDecl> locals;
  StmtPtr body;
  SourceLoc loc;
};

struct ModuleAst {
  std::string name;
  SourceLoc loc;
  std::vector<PortDecl> ports;
  std::vector<ParamDecl> params;
  std::vector<NetDecl> nets;
  std::vector<ContAssign> assigns;
  std::vector<AlwaysBlock> always_blocks;
  std::vector<InitialBlock> initials;
  std::vector<Instance> instances;
  std::vector<FunctionDef> functions;
};

struct SourceUnit {
  // (path, text) pairs; SourceLoc::file indexes this list.
  std::vector<std::pair<std::string, std::string>> files;
  std::vector<ModuleAst> modules;

  const ModuleAst* FindModule(const std::string& name) const;
  std::string FileName(SourceLoc loc) const;
  std::string Diag(SourceLoc loc, const std::string& message) const;
};

// Canonical source form; reparsing the result yields an identical AST.
std::string PrettyPrint(const ModuleAst& module);
std::string PrettyPrint(const SourceUnit& unit);
std::string PrettyPrintExpr(const Expr& expr);

}  // namespace aoc
