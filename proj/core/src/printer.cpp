/* Copyright 2026 The holq Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "holq/printer.hpp"

namespace holq {

namespace {

constexpr int kAppPrec = 100;

struct Printer {
  const NotationTable* table;  // may be null
  std::string out;

  // Decompose an application spine: head + args in order.
  static const Term* spine(const TermPtr& t, std::vector<const Term*>& args) {
    const Term* cur = t.get();
    while (cur->kind == Term::Kind::App) {
      args.push_back(cur->arg.get());
      cur = cur->sub.get();
    }
    std::reverse(args.begin(), args.end());
    return cur;
  }

  // Infix rendering applies to fully applied Q/D and declared operators.
  struct InfixForm {
    const Term *lhs, *rhs;
    std::string symbol;
    int prec;
    bool right_assoc;
  };

  bool as_infix(const Term* t, InfixForm& f) {
    if (t->kind != Term::Kind::App) return false;
    const Term* inner = t->sub.get();
    if (inner->kind != Term::Kind::App) return false;
    const Term* head = inner->sub.get();
    if (head->kind != Term::Kind::Const) return false;
    if (head->name == "Q" || head->name == "D") {
      f = {inner->arg.get(), t->arg.get(), head->name == "Q" ? "=" : "!=",
           kEqPrec, false};
      return true;
    }
    if (table) {
      if (const InfixSpec* s = table->find_const(head->name)) {
        f = {inner->arg.get(), t->arg.get(), s->symbol, s->prec, true};
        return true;
      }
    }
    return false;
  }

  // Binder sugar: Const b (declared binder) applied to exactly one Lam.
  const Term* as_binder(const Term* t) {
    if (!table || t->kind != Term::Kind::App) return nullptr;
    const Term* head = t->sub.get();
    if (head->kind != Term::Kind::Const || !table->is_binder(head->name))
      return nullptr;
    if (t->arg->kind != Term::Kind::Lam) return nullptr;
    return head;
  }

  void pr(const Term* t, int min_prec, bool lam_ok) {
    if (t->kind == Term::Kind::Lam) {
      if (!lam_ok) out += '(';
      out += '\\';
      out += t->name;
      out += ':';
      out += show_type(t->ty);
      out += ". ";
      pr(t->sub.get(), 0, true);
      if (!lam_ok) out += ')';
      return;
    }
    if (const Term* b = as_binder(t)) {
      if (!lam_ok) out += '(';
      const Term* lam = t->arg.get();
      out += b->name;
      out += ' ';
      out += lam->name;
      out += ':';
      out += show_type(lam->ty);
      out += ". ";
      pr(lam->sub.get(), 0, true);
      if (!lam_ok) out += ')';
      return;
    }
    InfixForm f;
    if (as_infix(t, f)) {
      bool parens = f.prec < min_prec;
      if (parens) out += '(';
      // A lambda on the left would swallow the operator on reparse; on the
      // right it is safe when this expression ends the enclosing one (or
      // we just opened parentheses ourselves).
      pr(f.lhs, f.right_assoc ? f.prec + 1 : f.prec, false);
      out += ' ';
      out += f.symbol;
      out += ' ';
      pr(f.rhs, f.right_assoc ? f.prec : f.prec + 1, parens || lam_ok);
      if (parens) out += ')';
      return;
    }
    switch (t->kind) {
      case Term::Kind::Const:
      case Term::Kind::Var:
        out += t->name;
        return;
      case Term::Kind::App: {
        bool parens = min_prec > kAppPrec;
        if (parens) out += '(';
        pr(t->sub.get(), kAppPrec, false);
        out += ' ';
        pr(t->arg.get(), kAppPrec + 1, false);
        if (parens) out += ')';
        return;
      }
      default: return;  // Lam handled above
    }
  }
};

}  // namespace

std::string show_term(const TermPtr& t, const NotationTable& table) {
  Printer p{&table, {}};
  p.pr(t.get(), 0, true);
  return p.out;
}

std::string show_term(const TermPtr& t) {
  Printer p{nullptr, {}};
  p.pr(t.get(), 0, true);
  return p.out;
}

}  // namespace holq
