#!/usr/bin/env python3
"""Regenerate the shipped resource tables under data/.

Sources:
  * pypinyin  - character and word readings (tone-digit style, neutral tone = 5)
  * jieba     - word list, frequencies and POS tags (mapped onto the csfe tagset)
  * cmudict   - English pronunciations (first variant of each plain word)

The pinyin->IPA and ARPAbet->IPA conventions are defined in this file and the
generated tables are the single source of truth at runtime.

Usage: gen_resources.py --jieba-dict PATH --cmudict PATH --out data/
"""

import argparse
import collections
import pathlib
import re
import sys

from pypinyin import Style, lazy_pinyin, pinyin
from pypinyin.pinyin_dict import pinyin_dict

NUM_CHARS = 6000
NUM_WORDS = 40000
MAX_WORD_LEN = 8
# always shipped regardless of frequency rank
PINNED_WORDS = ["欢声笑语"]

INITIALS = {
    "b": "p", "p": "pʰ", "m": "m", "f": "f",
    "d": "t", "t": "tʰ", "n": "n", "l": "l",
    "g": "k", "k": "kʰ", "h": "x",
    "j": "tɕ", "q": "tɕʰ", "x": "ɕ",
    "zh": "ʈʂ", "ch": "ʈʂʰ", "sh": "ʂ", "r": "ʐ",
    "z": "ts", "c": "tsʰ", "s": "s",
}

FINALS = {
    "a": "a", "o": "o", "e": "ɤ", "ai": "ai", "ei": "ei", "ao": "au", "ou": "ou",
    "an": "an", "en": "ən", "ang": "aŋ", "eng": "əŋ", "ong": "ʊŋ", "er": "ɚ",
    "i": "i", "ia": "ja", "ie": "je", "iao": "jau", "iu": "jou", "ian": "jɛn",
    "in": "in", "iang": "jaŋ", "ing": "iŋ", "iong": "jʊŋ",
    "u": "u", "ua": "wa", "uo": "wo", "uai": "wai", "ui": "wei", "uan": "wan",
    "un": "wən", "uang": "waŋ",
    "v": "y", "ve": "ɥe", "van": "ɥɛn", "vn": "yn",
}

# j/q/x write u for ü.
PALATAL_FINALS = {"u": "y", "ue": "ɥe", "uan": "ɥɛn", "un": "yn"}

ZERO_INITIAL = {
    "yi": "i", "ya": "ja", "yo": "jo", "ye": "je", "yao": "jau", "you": "jou",
    "yan": "jɛn", "yin": "in", "yang": "jaŋ", "ying": "iŋ", "yong": "jʊŋ",
    "yu": "y", "yue": "ɥe", "yuan": "ɥɛn", "yun": "yn",
    "wu": "u", "wa": "wa", "wo": "wo", "wai": "wai", "wei": "wei", "wan": "wan",
    "wen": "wən", "wang": "waŋ", "weng": "wəŋ",
    # syllabic nasals (interjections)
    "m": "m̩", "n": "n̩", "ng": "ŋ̍",
    "hm": "hm̩", "hng": "hŋ̍",
}

ARPABET = {
    "AA": "ɑ", "AE": "æ", "AH": "ə", "AO": "ɔ", "AW": "aʊ", "AY": "aɪ",
    "B": "b", "CH": "tʃ", "D": "d", "DH": "ð", "EH": "ɛ", "ER": "ɝ",
    "EY": "eɪ", "F": "f", "G": "ɡ", "HH": "h", "IH": "ɪ", "IY": "i",
    "JH": "dʒ", "K": "k", "L": "l", "M": "m", "N": "n", "NG": "ŋ",
    "OW": "oʊ", "OY": "ɔɪ", "P": "p", "R": "ɹ", "S": "s", "SH": "ʃ",
    "T": "t", "TH": "θ", "UH": "ʊ", "UW": "u", "V": "v", "W": "w",
    "Y": "j", "Z": "z", "ZH": "ʒ",
}

JIEBA_TO_TAGSET = {
    "n": "n", "nr": "n", "nrt": "n", "nrfg": "n", "ns": "n", "nt": "n", "nz": "n",
    "ng": "n", "t": "n", "tg": "n", "s": "n", "f": "n", "i": "n", "l": "n", "j": "n",
    "v": "v", "vn": "v", "vd": "v", "vg": "v", "vi": "v", "vq": "v",
    "a": "a", "ad": "a", "an": "a", "ag": "a", "z": "a", "zg": "a", "b": "a",
    "d": "d", "dg": "d", "df": "d",
    "p": "p", "c": "c",
    "u": "u", "uj": "u", "ul": "u", "uz": "u", "uv": "u", "ud": "u", "ug": "u",
    "m": "m", "mq": "m", "mg": "m",
    "q": "q",
    "r": "r", "rr": "r", "rz": "r", "rg": "r",
}

ENGLISH_POS = {
    "n": "time day year people way man woman child world life hand part place case "
         "week company system program question work government number night point "
         "home water room mother area money story fact month lot right study book "
         "eye job word business issue side kind head house service friend father "
         "power hour game line end member law car city name team minute idea kid "
         "body information school face others level office door health person art "
         "war history party result change morning reason research girl guy moment "
         "air teacher force education village laughter phone email computer music",
    "v": "be have do say get make go know take see come think look want give use "
         "find tell ask work seem feel try leave call need become put mean keep let "
         "begin help talk turn start show hear play run move like live believe hold "
         "bring happen write provide sit stand lose pay meet include continue set "
         "learn lead understand watch follow stop create speak read allow add spend "
         "grow open walk win offer remember love consider appear buy wait serve die "
         "send expect build stay fall cut reach kill remain is are was were been",
    "a": "good new first last long great little own other old right big high different "
         "small large next early young important few public bad same able best better "
         "sure free true whole real full special easy clear recent certain personal "
         "open red difficult available likely short single medical current wrong "
         "private past foreign fine common poor natural significant similar hot dead "
         "central happy serious ready simple left physical general environmental",
    "d": "not also very often however too usually really early never always sometimes "
         "together likely simply generally instead actually again rather almost "
         "especially ever quickly probably already below directly therefore else "
         "thus easily eventually exactly certainly normally currently extremely "
         "finally constantly properly soon here there now then",
    "p": "of in to for with on at from by about as into like through after over "
         "between out against during without before under around among",
    "c": "and that but or if because while although though unless whether nor since",
    "r": "i you he she it we they me him her us them my your his its our their this "
         "these those who what which whom whose myself yourself himself herself "
         "itself ourselves themselves",
    "m": "one two three four five six seven eight nine ten hundred thousand million "
         "billion first second third",
    "q": "piece pair couple dozen",
    "u": "the a an",
}


def is_cjk(ch):
    cp = ord(ch)
    return 0x4E00 <= cp <= 0x9FFF or 0x3400 <= cp <= 0x4DBF


def pinyin_ipa(base):
    if base in ZERO_INITIAL:
        return ZERO_INITIAL[base]
    if base in FINALS and base[0] in "aoe":
        return FINALS[base]
    for length in (2, 1):
        initial, final = base[:length], base[length:]
        if initial not in INITIALS or not final:
            continue
        onset = INITIALS[initial]
        if initial in ("j", "q", "x"):
            if final in PALATAL_FINALS:
                return onset + PALATAL_FINALS[final]
            if final.startswith("i") and final in FINALS:
                return onset + FINALS[final]
            return None
        if final == "i" and initial in ("z", "c", "s"):
            return onset + "ɹ̩"
        if final == "i" and initial in ("zh", "ch", "sh", "r"):
            return onset + "ɻ̩"
        if final in FINALS:
            return onset + FINALS[final]
        return None
    return None


TONAL = re.compile(r"^([a-z]+)([1-5])$")


def split_tonal(p):
    m = TONAL.match(p)
    return (m.group(1), int(m.group(2))) if m else (None, None)


def usable(p):
    base, _ = split_tonal(p)
    return base is not None and pinyin_ipa(base) is not None


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--jieba-dict", required=True)
    ap.add_argument("--cmudict", required=True)
    ap.add_argument("--out", required=True)
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    jieba = []
    for line in open(args.jieba_dict, encoding="utf-8"):
        parts = line.split()
        if len(parts) == 3 and all(is_cjk(c) for c in parts[0]):
            jieba.append((parts[0], int(parts[1]), parts[2]))

    char_freq = collections.Counter()
    for word, freq, _ in jieba:
        for ch in word:
            char_freq[ch] += freq

    char_readings = {}
    for ch, _ in sorted(char_freq.items(), key=lambda kv: (-kv[1], kv[0])):
        if len(char_readings) >= NUM_CHARS:
            break
        if ord(ch) not in pinyin_dict:
            continue
        readings = pinyin(ch, style=Style.TONE3, heteronym=True, neutral_tone_with_five=True)[0]
        readings = [r for r in readings if usable(r)]
        readings = list(dict.fromkeys(readings))
        if readings:
            char_readings[ch] = readings

    words = {}
    ranked = [w for w, _, _ in sorted(jieba, key=lambda t: (-t[1], t[0]))]
    for word in PINNED_WORDS + ranked:
        if len(words) >= NUM_WORDS + len(PINNED_WORDS):
            break
        if not (2 <= len(word) <= MAX_WORD_LEN) or word in words:
            continue
        if any(ch not in char_readings for ch in word):
            continue
        reading = lazy_pinyin(word, style=Style.TONE3, neutral_tone_with_five=True)
        if len(reading) != len(word) or not all(usable(r) for r in reading):
            continue
        words[word] = reading

    pos = {}
    for word, _, tag in jieba:
        if (word in words or word in char_readings) and word not in pos:
            pos[word] = JIEBA_TO_TAGSET.get(tag, "x")
    for tag, items in ENGLISH_POS.items():
        for w in items.split():
            pos.setdefault(w, tag)

    bases = set()
    for code in pinyin_dict:
        ch = chr(code)
        for r in pinyin(ch, style=Style.TONE3, heteronym=True, neutral_tone_with_five=True)[0]:
            if usable(r):
                bases.add(split_tonal(r)[0])
    for readings in list(char_readings.values()) + list(words.values()):
        for r in readings:
            bases.add(split_tonal(r)[0])

    english = {}
    for line in open(args.cmudict, encoding="utf-8"):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        word, *phones = line.split()
        if not re.fullmatch(r"[a-z][a-z']*", word) or word in english:
            continue
        if not phones or not any(p[-1].isdigit() for p in phones):
            continue
        english[word] = phones

    def write(name, header, rows):
        with open(out / name, "w", encoding="utf-8", newline="\n") as f:
            for h in header:
                f.write(f"# {h}\n")
            for row in rows:
                f.write(row + "\n")

    write("mandarin_char.tsv",
          ["char<TAB>tonal_pinyin[,alt...]; first reading is the default",
           "generated by tools/gen_resources.py from pypinyin"],
          (f"{c}\t{','.join(r)}" for c, r in sorted(char_readings.items())))
    write("mandarin_word.tsv",
          ["word<TAB>space-separated tonal pinyin, one syllable per character",
           "generated by tools/gen_resources.py from jieba + pypinyin"],
          (f"{w}\t{' '.join(r)}" for w, r in sorted(words.items())))
    write("pinyin_ipa.tsv",
          ["toneless_pinyin<TAB>ipa (v spells u-umlaut)",
           "generated by tools/gen_resources.py; this table defines the convention"],
          (f"{b}\t{pinyin_ipa(b)}" for b in sorted(bases)))
    write("arpabet_ipa.tsv",
          ["stress-stripped ARPAbet phone<TAB>ipa"],
          (f"{p}\t{i}" for p, i in sorted(ARPABET.items())))
    write("pos.tsv",
          ["word<TAB>tag; tagset n v a d p c u m q r x",
           "Mandarin tags mapped from jieba; English entries are a hand list"],
          (f"{w}\t{t}" for w, t in sorted(pos.items())))
    with open(out / "english.dict", "w", encoding="utf-8", newline="\n") as f:
        f.write(";;; CMU pronouncing dictionary subset, first variant per word\n")
        f.write(";;; see CMUDICT_LICENSE for terms\n")
        for w in sorted(english):
            f.write(f"{w.upper()}  {' '.join(english[w])}\n")

    print(f"chars={len(char_readings)} words={len(words)} pinyin={len(bases)} "
          f"english={len(english)} pos={len(pos)}", file=sys.stderr)


if __name__ == "__main__":
    main()
