from commentmap.nlp.tokenize import (
    CjkSegmenter,
    content_tokens,
    default_emoticon_detector,
    default_stopwords,
    tokenize,
)


class TestTokenize:
    def test_latin_words(self):
        assert tokenize("Last Dance") == ["last", "dance"]

    def test_empty(self):
        assert tokenize("") == []

    def test_punctuation_stripped(self):
        assert tokenize("Hello, world!!") == ["hello", "world"]

    def test_mixed_cjk_latin(self):
        assert tokenize("我爱rock music") == ["我", "爱", "rock", "music"]

    def test_hand_segmented_reference(self):
        # Expected segmentations built by hand against the shipped dictionary.
        cases = {
            "这首歌的旋律真好听": ["这", "首", "歌", "的", "旋律", "真", "好听"],
            "想起当年的毕业季": ["想起", "当年", "的", "毕业", "季"],
            "电视剧主题曲太感动了": ["电视剧", "主题曲", "太", "感动", "了"],
            "单曲循环一整天": ["单曲循环", "一", "整", "天"],
        }
        for text, expected in cases.items():
            assert tokenize(text) == expected, text

    def test_longest_match_wins(self):
        seg = CjkSegmenter(["单曲", "循环", "单曲循环"])
        assert seg.segment("单曲循环") == ["单曲循环"]

    def test_unknown_cjk_falls_back_to_chars(self):
        seg = CjkSegmenter(["好听"])
        assert seg.segment("烫烫好听烫") == ["烫", "烫", "好听", "烫"]

    def test_stopwords_retained_by_default(self):
        assert "the" in tokenize("the melody")
        assert "the" not in content_tokens("the melody")

    def test_stopword_list_has_both_scripts(self):
        sw = default_stopwords()
        assert "the" in sw and "的" in sw


class TestEmoticons:
    def test_ascii_smiley(self):
        det = default_emoticon_detector()
        assert det.contains_emoticon("hi :)")
        assert not det.contains_emoticon("hi there")

    def test_unicode_emoji_block(self):
        det = default_emoticon_detector()
        assert det.contains_emoticon("song \U0001F3B5")

    def test_kaomoji(self):
        det = default_emoticon_detector()
        assert det.contains_emoticon("T_T so sad")
