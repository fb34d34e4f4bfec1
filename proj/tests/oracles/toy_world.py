"""Reference semantics for the toy fixtures, written independently of the C++
library: Turkish folding, tokenization, wordlist+suffix analysis, the two
candidate generators and unique resolution."""

import itertools

GROUPS = ["cç", "gğ", "iı", "oö", "sş", "uü", "CÇ", "GĞ", "Iİ", "OÖ", "SŞ", "UÜ"]
ALPHABET = "abcçdefgğhıijklmnoöprsştuüvyz'"
FRONT, BACK, ROUNDED = set("eiöü"), set("aıou"), set("oöuü")
VOICELESS = set("çfhkpsşt")


def fold(s):
    out = []
    for c in s:
        if c == "I":
            out.append("ı")
        elif c == "İ":
            out.append("i")
        else:
            out.append(c.lower())
    return "".join(out)


def is_word_char(c):
    return c.isalpha() or c.isdigit() or c in "'’"


def tokenize(text):
    tokens, cur = [], ""
    for c in text:
        if is_word_char(c):
            cur += c
            continue
        if cur:
            tokens.append(cur)
            cur = ""
        if not c.isspace():
            tokens.append(c)
    if cur:
        tokens.append(cur)
    return tokens


def has_letter(tok):
    return any(c.isalpha() for c in tok)


def _last_vowel(stem):
    for c in reversed(stem):
        if c in FRONT or c in BACK:
            return c
    return None


def _atom(name, stem):
    last = stem[-1] if stem else None
    v = _last_vowel(stem)
    if name == "any":
        return True
    if name == "vowel-final":
        return last is not None and (last in FRONT or last in BACK)
    if name == "consonant-final":
        return last is not None and last.isalpha() and not (last in FRONT or last in BACK)
    if name == "voiceless-final":
        return last is not None and last in VOICELESS
    if name == "voiced-final":
        return last is not None and last.isalpha() and last not in VOICELESS
    if name == "front":
        return v in FRONT
    if name == "back":
        return v in BACK
    if name == "rounded":
        return v in ROUNDED
    if name == "unrounded":
        return v is not None and v not in ROUNDED
    raise ValueError(name)


def predicate(name, stem):
    return all(_atom(a, stem) for a in name.split("+"))


def read_rules(path):
    rules = []
    for line in open(path, encoding="utf-8"):
        line = line.rstrip("\n")
        if not line or line.startswith("#"):
            continue
        suffix, pred = line.split("\t")
        rules.append((suffix, pred))
    return rules


class Oracle:
    """Left-to-right decomposition: every prefix that is a lexicon word is a
    candidate stem, the rest must split into at most `depth` suffixes."""

    def __init__(self, words, rules, depth=4):
        self.lexicon = {fold(w) for w in words if w}
        self.rules = rules
        self.depth = depth
        self.cache = {}

    def _suffixes(self, stem, rest, budget):
        if not rest:
            return True
        if budget == 0:
            return False
        for suffix, pred in self.rules:
            if rest.startswith(suffix) and predicate(pred, stem):
                if self._suffixes(stem + suffix, rest[len(suffix):], budget - 1):
                    return True
        return False

    def analyzable(self, word):
        word = fold(word)
        if word in self.cache:
            return self.cache[word]
        ok = word in self.lexicon
        for i in range(1, len(word)):
            if ok:
                break
            if word[:i] in self.lexicon:
                ok = self._suffixes(word[:i], word[i:], self.depth)
        self.cache[word] = bool(ok)
        return bool(ok)


def deasciify(word, oracle, cap=12):
    slots = []
    for c in word:
        group = next((g for g in GROUPS if c in g), None)
        slots.append(group if group else c)
    k = sum(1 for c in word if any(c in g for g in GROUPS))
    if k > cap:
        return None
    out = set()
    for combo in itertools.product(*slots):
        cand = "".join(combo)
        if cand != word and oracle.analyzable(cand):
            out.add(cand)
    return sorted(out)


def edits1(word):
    splits = [(word[:i], word[i:]) for i in range(len(word) + 1)]
    out = set()
    for a, b in splits:
        if b:
            out.add(a + b[1:])
        if len(b) > 1:
            out.add(a + b[1] + b[0] + b[2:])
        for c in ALPHABET:
            if b:
                out.add(a + c + b[1:])
            out.add(a + c + b)
    out.discard(word)
    out.discard("")
    return sorted(out)


def spell(word, oracle):
    return [w for w in edits1(word) if oracle.analyzable(w)]


def resolve(word, oracle, cap=12):
    """Returns (correction, provenance) or None, plus a capped flag."""
    if not word or oracle.analyzable(word):
        return None
    d = deasciify(word, oracle, cap)
    if d is None:
        return None
    if len(d) == 1:
        return (d[0], "deasciifier")
    if d:
        return None
    s = spell(word, oracle)
    if len(s) == 1:
        return (s[0], "spellchecker")
    return None
