class Texts:
    """
    Constantes de texto para mensagens de log, erros e respostas.
    """

    # Mensagens gerais
    SUCCESS = "Operação concluída com sucesso"
    ERROR_UNKNOWN = "Erro desconhecido"
    ERROR_INTERNAL = "Erro interno do servidor"
    VALIDATION_ERROR = "Erro de validação"

    # Álgebra SU(2)
    ERROR_NON_FINITE = "Entrada não finita: {}"
    ERROR_EMPTY_SEQUENCE = "Sequência de fases vazia"
    ERROR_NOT_UNITARY = "Matriz não unitária (desvio {})"
    ERROR_BAD_SHAPE = "Matriz com formato inválido: {}"

    # Funções de resposta
    ERROR_BAD_LENGTH = "Comprimento de sequência inválido: {}"
    ERROR_COEFFICIENT_COUNT = "Número de coeficientes incompatível com L={}: {}"
    ERROR_FORWARD_SINGULAR = "Sistema de interpolação singular para L={}"
    ERROR_FORWARD_RESIDUAL = "Resíduo do mapa direto acima da tolerância: {}"
    ERROR_EXTRACTION_FAILED = "Extração de fases falhou; melhor resíduo {}"
    ERROR_EXTRACTION_NOT_ACHIEVABLE = "Coeficientes não realizáveis (norma máxima {})"
    ERROR_EXTRACTION_TOO_LONG = "Extração de fases suportada apenas para L <= {}"
    LOG_EXTRACTION_DONE = "Fases extraídas para L={} (início {}, resíduo {})"

    # Síntese
    ERROR_REGION = "({}, {}) fora da região de validade de {}: {}"
    ERROR_NO_VARIANT = "Nenhuma variante cobre ({}, {}): {}"
    ERROR_THETA0_RANGE = "Rotação base fora de (0, pi): {}"
    ERROR_TARGET_RANGE = "Rotação alvo fora de [-2pi, 4pi]: {}"
    ERROR_PRECONDITION_4THETA0 = "thetaT={} excede 4*theta0={}"
    ERROR_SINGULAR_TARGET = "thetaT={} é singular; use o procedimento de limite"
    ERROR_DEGENERATE_SYSTEM = "Sistema linear degenerado (número de condição {})"
    ERROR_INCONSISTENT = "Inconsistência interna em ({}, {}): {}"
    ERROR_VERIFICATION = "Verificação falhou: fidelidade {}, derivada {}"
    ERROR_NEGATIVE_RADICAND = "Radicando negativo na restrição anti-simétrica: {}"
    ERROR_UNKNOWN_VARIANT = "Variante desconhecida: {}"
    LOG_SYNTHESIS = "Porta sintetizada: variante={} theta0={} thetaT={} fidelidade={}"
    LOG_SYNTHESIS_LIMIT = "Alvo singular {}; usando extrapolação nos deslocamentos {}"
    LOG_NEAR_DEGENERATE = "Sistema quase degenerado (número de condição {})"

    # Mapas de validade
    ERROR_RESOLUTION = "Resolução {}pi abaixo do mínimo {}pi"
    LOG_REGION = "Mapa de validade {}: {} células, {} válidas"
    LOG_INTERVAL = "Intervalo de alcance completo {}: {}"
    WARNING_COARSE_RESOLUTION = "Resolução {}pi mais grossa que {}pi"
    INTERVAL_NONE_FOUND = "nenhum encontrado"

    # Modelo de feixe e armadilha
    ERROR_BEAM_PARAMETER = "Parâmetro de feixe inválido: {}"
    ERROR_PULSE_DURATION = "Duração de pulso inválida: {}"
    ERROR_ZONE_RABI = "Frequência de Rabi não positiva na zona {}"
    ERROR_UNCOVERABLE = "Razão de Rabi {} excede a janela {}"
    ERROR_OUTSIDE_WINDOW = "Zona {} com rotação base {} fora da janela [{}, {}]"
    ERROR_DISPLACEMENT_RANGE = "Deslocamento {} m fora da escala cheia {} m"
    ERROR_ZONE_BUDGET = "Deslocamento {} m excede um comprimento de onda na zona {}"
    ERROR_QUANTIZATION_MODE = "Modo de quantização desconhecido: {}"
    LOG_CALIBRATION = "Duração de pulso calibrada: {} s para {} zonas"

    # Experimentos
    ERROR_SPAM_RANGE = "Fidelidade SPAM fora de [0.5, 1]: {}"
    ERROR_SHOTS = "Número de repetições inválido: {}"
    ERROR_RAMSEY_CALIBRATION = "Rotação base {} na zona {} difere de pi/2"
    ERROR_SCAN_TARGET = "Falha de síntese em thetaT={}: {}"
    ERROR_FIT_POINTS = "Ajuste requer ao menos {} pontos cobrindo uma franja"
    ERROR_FIT_FAILED = "Ajuste de contraste não convergiu (resíduo {})"
    ERROR_CORRELATION_LENGTH = "Vetores de resíduo com comprimentos diferentes: {} e {}"
    ERROR_CORRELATION_VARIANCE = "Variância nula nos resíduos; correlação indefinida"
    ERROR_UNKNOWN_ZONE = "Zona desconhecida: {}"
    ERROR_TIMING = "Sequência temporal inválida: {}"
    LOG_SCAN = "Varredura {} concluída: {} pontos, {} repetições, semente {}"
    LOG_FIT = "Contraste ajustado: {} +/- {}"

    # Configuração e artefatos
    ERROR_CONFIG = "Configuração inválida: {}"
    ERROR_CONFIG_KEYS = "Chaves inválidas na configuração: {}"
    ERROR_CONFIG_READ = "Erro ao ler configuração {}: {}"
    ERROR_ARTIFACT_WRITE = "Erro ao gravar artefato {}: {}"
    ERROR_ANGLE_LITERAL = "Ângulo inválido: {}"
    LOG_ARTIFACT = "Artefato gravado: {}"
    LOG_CONFIG_LOADED = "Configuração carregada: {} (sha256 {})"
    LOG_RUN = "Execução {} concluída com código {}"

    # Logs de aplicação
    LOG_REQUEST = "{} {} - Status: {} - Duração: {}s"
    LOG_ERROR = "Erro: {}"
    LOG_ERROR_CONTEXT = "Erro: {} - Contexto: {}"
    LOG_HEALTH = "Health check realizado com sucesso"

    # Relatórios
    REPORT_CONSISTENT = "consistente com a escala calibrada lambda/2^{}"
    REPORT_INCONSISTENT = "inconsistente com a escala calibrada lambda/2^{}: passo {:.3g} vezes o calibrado"

    @classmethod
    def format(cls, message: str, *args) -> str:
        """
        Formata uma mensagem com argumentos.
        """
        return message.format(*args)

    @classmethod
    def get_error_message(cls, error_code: str) -> str:
        """
        Obtém uma mensagem de erro pelo código.
        """
        return getattr(cls, error_code, cls.ERROR_UNKNOWN)
