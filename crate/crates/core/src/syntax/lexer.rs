use super::SourceError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Token {
    Ident(String),
    One,
    Zero,
    Top,
    Bot,
    Neg,
    CoNeg,
    Star,
    And,
    Or,
    Arrow,
    BackArrow,
    LParen,
    RParen,
    Comma,
    Turnstile,
    End,
}

impl Token {
    pub(crate) fn describe(&self) -> String {
        match self {
            Token::Ident(s) => format!("`{s}`"),
            Token::One => "`1`".into(),
            Token::Zero => "`0`".into(),
            Token::Top => "`top`".into(),
            Token::Bot => "`bot`".into(),
            Token::Neg => "`neg`".into(),
            Token::CoNeg => "`coneg`".into(),
            Token::Star => "`*`".into(),
            Token::And => "`/\\`".into(),
            Token::Or => "`\\/`".into(),
            Token::Arrow => "`->`".into(),
            Token::BackArrow => "`<-`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::Comma => "`,`".into(),
            Token::Turnstile => "`|-`".into(),
            Token::End => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Spanned {
    pub token: Token,
    pub line: usize,
    pub column: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic()
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

/// Splits one line of text into tokens. Columns are 1-based and count chars.
pub(crate) fn tokenize(text: &str, line: usize, first_column: usize) -> Result<Vec<Spanned>, SourceError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = first_column + i;
        let push = |out: &mut Vec<Spanned>, token| out.push(Spanned { token, line, column });
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let two: String = chars[i..chars.len().min(i + 2)].iter().collect();
        let (token, width) = match two.as_str() {
            "->" => (Token::Arrow, 2),
            "<-" => (Token::BackArrow, 2),
            "/\\" => (Token::And, 2),
            "\\/" => (Token::Or, 2),
            "|-" => (Token::Turnstile, 2),
            "¬′" | "¬'" => (Token::CoNeg, 2),
            _ => match c {
                '*' | '⊗' => (Token::Star, 1),
                '∧' => (Token::And, 1),
                '∨' => (Token::Or, 1),
                '→' => (Token::Arrow, 1),
                '←' => (Token::BackArrow, 1),
                '¬' => (Token::Neg, 1),
                '⊢' => (Token::Turnstile, 1),
                '⊤' => (Token::Top, 1),
                '⊥' => (Token::Bot, 1),
                '(' => (Token::LParen, 1),
                ')' => (Token::RParen, 1),
                ',' => (Token::Comma, 1),
                '1' => (Token::One, 1),
                '0' => (Token::Zero, 1),
                c if is_ident_start(c) => {
                    let mut j = i + 1;
                    while j < chars.len() && is_ident_continue(chars[j]) {
                        j += 1;
                    }
                    let word: String = chars[i..j].iter().collect();
                    let token = match word.as_str() {
                        "neg" => Token::Neg,
                        "coneg" => Token::CoNeg,
                        "top" => Token::Top,
                        "bot" => Token::Bot,
                        _ => Token::Ident(word),
                    };
                    (token, j - i)
                }
                other => {
                    return Err(SourceError {
                        line,
                        column,
                        expected: "a formula, connective or `|-`".into(),
                        found: format!("`{other}`"),
                    })
                }
            },
        };
        push(&mut out, token);
        i += width;
    }
    out.push(Spanned { token: Token::End, line, column: first_column + chars.len() });
    Ok(out)
}
